#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "prpd/cospan.hpp"
#include "prpd/freemon.hpp"
#include "prpd/levelgraph.hpp"
#include "prpd/properad.hpp"
#include "prpd/segal.hpp"
#include "prpd/verify.hpp"

using namespace prpd;

namespace {

struct Io {
  std::string input;
  std::string output;
};

// Raised for malformed or invalid input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const Io& io) {
  std::string text;
  if (io.input.empty() || io.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(io.input);
    if (!f) throw InputError("cannot open " + io.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(e.what());
  }
}

void write_text(const Io& io, const std::string& s) {
  if (io.output.empty() || io.output == "-") {
    std::cout << s << "\n";
    return;
  }
  std::ofstream f(io.output);
  if (!f) throw InputError("cannot write " + io.output);
  f << s << "\n";
}

void write_json(const Io& io, const json& j) { write_text(io, j.dump(2)); }

int report(const Io& io, const Verdict& v, const std::string& ref) {
  json out = v;
  if (!v.ok) out["paper_ref"] = ref;
  write_json(io, out);
  return v.ok ? 0 : 1;
}

template <class T>
T as(const json& j) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

template <class T>
std::pair<T, T> pair_of(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected a JSON array of two objects");
  return {as<T>(j[0]), as<T>(j[1])};
}

FinCommMonoid named_monoid(const std::string& s) {
  if (s == "trivial") return FinCommMonoid::trivial();
  if (s == "z2") return FinCommMonoid::cyclic(2);
  if (s == "z3") return FinCommMonoid::cyclic(3);
  if (s == "max") return FinCommMonoid::max_boolean();
  throw InputError("unknown monoid " + s);
}

FinCommMonoid monoid_of(const json& j) { return j.is_string() ? named_monoid(j.get<std::string>()) : as<FinCommMonoid>(j); }

// {"monoid": M} gives the endomorphism properad, {"colors", "generators"} a
// free properad, anything else is read as a tabulated properad.
std::unique_ptr<Properad> properad_of(const json& j, int vertex_bound) {
  if (j.contains("monoid")) return std::make_unique<EndomorphismProperad>(monoid_of(j.at("monoid")));
  if (j.contains("generators"))
    return std::make_unique<FreeProperad>(j.value("colors", 1), as<std::vector<Generator>>(j.at("generators")),
                                          j.value("vertex_bound", vertex_bound));
  return std::make_unique<DiscreteProperad>(as<DiscreteProperad>(j));
}

Chain concatenate(const Chain& a, const Chain& b) {
  if (a.boundary(a.height()) != b.base) throw InputError("chains do not share a boundary");
  std::vector<Cospan> steps = a.steps;
  steps.insert(steps.end(), b.steps.begin(), b.steps.end());
  return Chain(a.base, std::move(steps));
}

json canonical_json(const std::string& type, const json& in) {
  auto wrap = [](const auto& c) { return json{{"form", c.form}, {"aut_order", c.aut_order}}; };
  if (type == "cospan") return wrap(canonicalize(as<Cospan>(in)));
  if (type == "span") return wrap(canonicalize(as<Span>(in)));
  if (type == "chain") return wrap(canonicalize(as<Chain>(in)));
  if (type == "weighted") return wrap(canonicalize(as<WeightedCospan>(in)));
  if (type == "dag") return json{{"form", canonical_dag(as<LabeledDAG>(in))}};
  throw InputError("unknown object type " + type);
}

std::string guess_type(const json& in) {
  if (in.contains("levels")) return "chain";
  if (in.contains("labels")) return "weighted";
  if (in.contains("edge_src") || in.contains("vertices")) return "dag";
  return "cospan";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"properad toolkit"};
  app.require_subcommand(1);
  Io io;
  auto add_io = [&](CLI::App* c) {
    c->add_option("-i,--input", io.input, "JSON input path (default stdin)");
    c->add_option("-o,--output", io.output, "output path (default stdout)");
    return c;
  };
  std::function<int()> action;

  {
    auto* c = add_io(app.add_subcommand("compose", "compose two morphisms given as a JSON pair"));
    static std::string kind;
    c->add_option("kind", kind, "cospan | proj | span | weighted | chain")
        ->required()
        ->check(CLI::IsMember({"cospan", "proj", "span", "weighted", "chain"}));
    c->callback([&] {
      action = [&] {
        json in = read_input(io);
        if (kind == "cospan") {
          auto [a, b] = pair_of<Cospan>(in);
          write_json(io, compose_cospans(a, b));
        } else if (kind == "proj") {
          auto [a, b] = pair_of<ProjCospan>(in);
          write_json(io, compose_proj(a, b));
        } else if (kind == "span") {
          auto [a, b] = pair_of<Span>(in);
          write_json(io, compose_spans(a, b));
        } else if (kind == "chain") {
          auto [a, b] = pair_of<Chain>(in);
          write_json(io, concatenate(a, b));
        } else {
          if (!in.is_object()) throw InputError("expected {\"monoid\", \"cospans\"}");
          auto [a, b] = pair_of<WeightedCospan>(in.at("cospans"));
          write_json(io, compose_weighted(monoid_of(in.at("monoid")), a, b));
        }
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("canonical", "canonical form and automorphism count"));
    static std::string type;
    c->add_option("--type", type, "cospan | span | chain | weighted | dag (guessed when omitted)");
    c->callback([&] {
      action = [&] {
        json in = read_input(io);
        write_json(io, canonical_json(type.empty() ? guess_type(in) : type, in));
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("classify-hom", "classify a map of free commutative monoids"));
    c->callback([&] {
      action = [&] {
        write_json(io, classify_hom(as<MonHom>(read_input(io))));
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("factorize-hom", "transfer-then-free factorization"));
    c->callback([&] {
      action = [&] {
        auto [t, f] = ctf_eqf_factorize(as<MonHom>(read_input(io)));
        write_json(io, json{{"transfer", t}, {"free", f}});
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("check-free-submonoid", "test a finitely generated submonoid for freeness"));
    static int degree = 6;
    c->add_option("--degree", degree, "search bound on relation degree")->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        Submonoid s = as<Submonoid>(read_input(io));
        FreenessVerdict v = is_free_submonoid(s, degree);
        if (v.ok) return report(io, Verdict::pass(), "");
        Verdict f = Verdict::fail("relation", {{"left", v.relation->first}, {"right", v.relation->second}});
        return report(io, f, "free submonoid: distinct generator words with equal value");
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("decompose-chain", "split a chain into connected components"));
    c->callback([&] {
      action = [&] {
        write_json(io, decompose_chain(as<Chain>(read_input(io))));
        return 0;
      };
    });
  }
  {
    auto* c = app.add_subcommand("verify-levelwise-free", "exhaustive freeness check of one nerve level");
    static int level = 1, bound = 4;
    c->add_option("--level", level, "nerve level")->check(CLI::NonNegativeNumber);
    c->add_option("--bound", bound, "total size bound")->check(CLI::PositiveNumber);
    c->add_option("-o,--output", io.output);
    c->callback([&] {
      action = [&] { return report(io, verify_levelwise_free(level, bound), "level-wise freeness of the cospan nerve"); };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("check-properad", "check unitality, associativity and equivariance"));
    static int vertices = 3, legs = 2;
    c->add_option("--vertices", vertices, "largest plan")->check(CLI::Range(2, 4));
    c->add_option("--legs", legs, "largest arity per side")->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        auto p = properad_of(read_input(io), 4);
        return report(io, check_axioms(*p, {vertices, legs}), "properad axioms");
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("free-properad", "list operations of a free properad"));
    static int vertices = 3, legs = 4;
    static CLI::Option* given =
        c->add_option("--vertices", vertices, "vertex bound (overrides vertex_bound in the input)")
            ->check(CLI::Range(1, 4));
    c->add_option("--legs", legs, "largest arity per side listed")->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        json in = read_input(io);
        int bound = given->count() ? vertices : in.value("vertex_bound", vertices);
        FreeProperad fp(in.value("colors", 1), as<std::vector<Generator>>(in.at("generators")), bound);
        json ops = json::array();
        for (int op : all_operations(fp, legs))
          ops.push_back({{"name", fp.op_name(op)}, {"signature", fp.signature(op)}, {"graph", fp.graph(op)}});
        write_json(io, json{{"count", ops.size()}, {"operations", ops}});
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("is-monic", "test whether every non-identity operation has one output"));
    static int legs = 4;
    c->add_option("--legs", legs, "largest arity per side")->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        auto p = properad_of(read_input(io), 4);
        bool m = is_monic(*p, legs);
        Verdict v = m ? Verdict::pass() : Verdict::fail("not_monic", json::object());
        return report(io, v, "monic properad: every operation has one output");
      };
    });
  }
  {
    auto* c = app.add_subcommand("admissible", "admissible arity subsets");
    c->require_subcommand(1);
    static int box = 4, ebox = 2;
    auto* chk = add_io(c->add_subcommand("check", "check a JSON list of arity pairs"));
    chk->add_option("--box", box, "arity box")->check(CLI::Range(0, 6));
    chk->callback([&] {
      action = [&] {
        std::set<ArityPair> s;
        for (const auto& p : as<std::vector<std::array<int, 2>>>(read_input(io))) s.insert({p[0], p[1]});
        AdmissibleVerdict v = is_admissible(s, box);
        if (v.ok) return report(io, Verdict::pass(), "");
        json w = v.kind == "unit" ? json::object() : json{v.witness[0], v.witness[1], v.witness[2], v.witness[3]};
        return report(io, Verdict::fail(v.kind, w), "admissible arities: closure under composites");
      };
    });
    auto* en = c->add_subcommand("enumerate", "list all admissible subsets of a box");
    en->add_option("--box", ebox, "arity box")->check(CLI::Range(0, 3));
    en->add_option("-o,--output", io.output);
    en->callback([&] {
      action = [&] {
        auto all = enumerate_admissible(ebox);
        write_json(io, json{{"box", ebox}, {"count", all.size()}, {"sets", all}});
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("endo-properad", "tabulate the endomorphism properad of a monoid"));
    static std::string monoid;
    static int legs = 2;
    static bool check = false;
    c->add_option("--monoid", monoid, "trivial | z2 | z3 | max (otherwise read monoid JSON)");
    c->add_option("--legs", legs, "largest arity per side")->check(CLI::Range(1, 3));
    c->add_flag("--check", check, "run the axiom checker instead of printing tables");
    c->callback([&] {
      action = [&] {
        FinCommMonoid m = monoid.empty() ? monoid_of(read_input(io)) : named_monoid(monoid);
        EndomorphismProperad p = endomorphism_properad(m);
        if (check) return report(io, check_axioms(p, {3, legs}), "properad axioms");
        write_json(io, tabulate(p, legs));
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("realize", "graph of a level object"));
    static bool dot = false;
    c->add_flag("--dot", dot, "emit Graphviz DOT");
    c->callback([&] {
      action = [&] {
        LabeledDAG g = realize(as<Chain>(read_input(io)));
        if (dot)
          write_text(io, to_dot(g));
        else
          write_json(io, g);
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("check-segal", "segmentation and decomposition of a tabulated presheaf"));
    static int induce = 0;
    c->add_option("--induce", induce, "read a properad and check its presheaf at this size bound")
        ->check(CLI::Range(1, 4));
    c->callback([&] {
      action = [&] {
        json in = read_input(io);
        TabulatedPresheaf t = induce ? induced_presheaf(*properad_of(in, 4), induce) : as<TabulatedPresheaf>(in);
        return report(io, check_segal(t), "Segal condition");
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("envelope", "nerve data of the envelope of a properad"));
    static int level = 2, bound = 4;
    static bool check = false;
    c->add_option("--level", level, "top level")->check(CLI::Range(1, 3));
    c->add_option("--bound", bound, "size bound")->check(CLI::PositiveNumber);
    c->add_flag("--check", check, "run the pre-properad checker instead of printing data");
    c->callback([&] {
      action = [&] {
        auto p = properad_of(read_input(io), 4);
        SimplicialMonoidData d = envelope_nerve(*p, level, bound);
        if (check) return report(io, check_pre_properad(d), "pre-properad: free levels, Segal, free composition");
        write_json(io, d);
        return 0;
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("check-pre-properad", "check simplicial monoid data"));
    static std::string span;
    static int bound = 4;
    c->add_option("--span", span, "generate span nerve data instead: all | right | both")
        ->check(CLI::IsMember({"all", "right", "both"}));
    c->add_option("--bound", bound, "size bound for --span")->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        SimplicialMonoidData d;
        if (span.empty()) {
          d = as<SimplicialMonoidData>(read_input(io));
        } else {
          SpanFilter f = span == "all" ? SpanFilter::All
                         : span == "right" ? SpanFilter::RightSurjective
                                           : SpanFilter::BothSurjective;
          d = span_nerve_data(2, bound, f);
        }
        return report(io, check_pre_properad(d), "pre-properad: free levels, Segal, free composition");
      };
    });
  }
  {
    auto* c = add_io(app.add_subcommand("is-complete", "look for non-identity invertible (1,1) operations"));
    c->callback([&] {
      action = [&] { return report(io, check_complete(*properad_of(read_input(io), 4)), "completeness"); };
    });
  }
  {
    auto* c = app.add_subcommand("verify-all", "run the bounded verification suite");
    static int bound = 2;
    c->add_option("--bound", bound, "bound")->check(CLI::Range(1, 3));
    c->add_option("-o,--output", io.output);
    c->callback([&] {
      action = [&] {
        json r = verify_all(bound);
        write_json(io, r);
        return r["ok"].get<bool>() ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
