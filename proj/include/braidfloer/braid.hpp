#ifndef BRAIDFLOER_BRAID_HPP
#define BRAIDFLOER_BRAID_HPP

#include <string>
#include <vector>

#include "braidfloer/rational.hpp"

namespace bf {

// Braid word in B_n: signed Artin generator indices, |k| in [1, n-1].
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
};

struct BraidParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses a comma/whitespace separated list of nonzero integers.
BraidWord parse_braid(const std::string& text, int strands);

int writhe(const BraidWord& w);

// Number of cycles of the permutation of {1..n} induced by the word.
int closure_components(const BraidWord& w);

// Permutation image: perm[i] = strand position where strand i ends (0-based).
std::vector<int> strand_permutation(const BraidWord& w);

// sl(L) = wr(rho) - n for the braid closure.
int self_linking(const BraidWord& w);

// (Maslov, Alexander) of the transverse class: (sl+1, (sl+1)/2).
std::pair<int, Half> expected_invariant_gradings(const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

}  // namespace bf

#endif
