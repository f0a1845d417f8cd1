#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace prpd {

// Outcome of a bounded exhaustive check. On failure `kind` names the violated
// property and `witness` holds the first offending input in enumeration order.
struct Verdict {
  bool ok = true;
  std::string kind;
  nlohmann::json witness;
  std::int64_t checked = 0;
  std::int64_t skipped = 0;

  static Verdict pass(std::int64_t checked = 0) {
    Verdict v;
    v.checked = checked;
    return v;
  }
  static Verdict fail(std::string kind, nlohmann::json witness, std::int64_t checked = 0) {
    Verdict v;
    v.ok = false;
    v.kind = std::move(kind);
    v.witness = std::move(witness);
    v.checked = checked;
    return v;
  }
};

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"ok", v.ok}, {"checked", v.checked}};
  if (v.skipped) j["skipped"] = v.skipped;
  if (!v.ok) {
    j["kind"] = v.kind;
    j["witness"] = v.witness;
  }
}

}  // namespace prpd
