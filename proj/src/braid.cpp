#include "braidfloer/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bf {

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw BraidParseError("strand count must be >= 1");
    BraidWord w;
    w.strands = strands;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw BraidParseError("malformed braid letter '" + tok + "'");
        }
        if (pos != tok.size()) throw BraidParseError("malformed braid letter '" + tok + "'");
        if (v == 0) throw BraidParseError("braid letter 0 is not a generator");
        if (std::abs(v) > strands - 1)
            throw BraidParseError("letter " + tok + " out of range for B_" + std::to_string(strands));
        w.letters.push_back(static_cast<int>(v));
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            tok.push_back(c);
        }
    }
    flush();
    return w;
}

int writhe(const BraidWord& w) {
    int s = 0;
    for (int k : w.letters) s += (k > 0) ? 1 : -1;
    return s;
}

std::vector<int> strand_permutation(const BraidWord& w) {
    std::vector<int> p(w.strands);
    std::iota(p.begin(), p.end(), 0);
    for (int k : w.letters) {
        int i = std::abs(k) - 1;
        std::swap(p[i], p[i + 1]);
    }
    return p;
}

int closure_components(const BraidWord& w) {
    std::vector<int> p = strand_permutation(w);
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) seen[j] = true;
    }
    return cycles;
}

int self_linking(const BraidWord& w) { return writhe(w) - w.strands; }

std::pair<int, Half> expected_invariant_gradings(const BraidWord& w) {
    int m = self_linking(w) + 1;
    return {m, Half::halves(m)};
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r;
    r.strands = w.strands;
    r.letters.assign(w.letters.rbegin(), w.letters.rend());
    for (int& k : r.letters) k = -k;
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

}  // namespace bf
