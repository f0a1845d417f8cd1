#pragma once

#include "prpd/cospan.hpp"
#include "prpd/verdict.hpp"

namespace prpd {

// Every cospan with |A|, |B|, |X| <= max_size.
std::vector<Cospan> all_cospans(int max_size);

// Associativity, unitality and interchange of compose_cospans / monoidal_sum,
// compared as normalized cospans (isomorphism fixing both boundaries).
Verdict check_cospan_coherence(int max_size);
// Strict associativity and unitality of compose_proj for |A| + |B| <= max_total
// on every leg.
Verdict check_proj_coherence(int max_total);
// span_to_proj preserves identities and composition for sets of size <= max_size.
Verdict check_span_to_proj(int max_size);

// Runs the structural checks at the given bound; "ok" is the conjunction.
json verify_all(int bound);

}  // namespace prpd
