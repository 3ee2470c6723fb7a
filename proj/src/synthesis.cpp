#include "qobdd/synthesis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qobdd {

namespace {

void check_compatible(const KQobddProgram& b1, const KQobddProgram& b2) {
    if (b1.n != b2.n)
        throw std::invalid_argument("tensor synthesis: variable counts differ (" +
                                    std::to_string(b1.n) + " vs " + std::to_string(b2.n) + ")");
    if (b1.k != b2.k)
        throw std::invalid_argument("tensor synthesis: layer counts differ (" +
                                    std::to_string(b1.k) + " vs " + std::to_string(b2.k) + ")");
    if (b1.ordering.sigma != b2.ordering.sigma)
        throw std::invalid_argument("tensor synthesis: variable orderings differ");
}

}  // namespace

KQobddProgram tensor_programs(const KQobddProgram& b1, const KQobddProgram& b2,
                              std::vector<std::size_t> accepting) {
    check_compatible(b1, b2);
    KQobddProgram p;
    p.n = b1.n;
    p.k = b1.k;
    p.width = b1.width * b2.width;
    p.ordering = b1.ordering;
    p.pairs.reserve(p.k * p.n);
    for (std::size_t i = 0; i < b1.pairs.size(); ++i)
        p.pairs.push_back(TransformationPair{tensor_product(b1.pairs[i].t0, b2.pairs[i].t0),
                                             tensor_product(b1.pairs[i].t1, b2.pairs[i].t1)});
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    p.accepting = std::move(accepting);
    return p;
}

KQobddProgram and_synthesis(const KQobddProgram& b1, const KQobddProgram& b2) {
    const ProductStateIndexing ix{b1.width, b2.width};
    std::vector<std::size_t> accepting;
    accepting.reserve(b1.accepting.size() * b2.accepting.size());
    for (std::size_t i : b1.accepting)
        for (std::size_t j : b2.accepting) accepting.push_back(ix.index(i, j));
    return tensor_programs(b1, b2, std::move(accepting));
}

KQobddProgram or_synthesis(const KQobddProgram& b1, const KQobddProgram& b2) {
    const ProductStateIndexing ix{b1.width, b2.width};
    std::vector<std::size_t> accepting;
    for (std::size_t i : b1.accepting)
        for (std::size_t j = 0; j < b2.width; ++j) accepting.push_back(ix.index(i, j));
    for (std::size_t i = 0; i < b1.width; ++i)
        for (std::size_t j : b2.accepting) accepting.push_back(ix.index(i, j));
    return tensor_programs(b1, b2, std::move(accepting));
}

KQobddProgram not_synthesis(const KQobddProgram& b) {
    KQobddProgram p = b;
    std::vector<std::size_t> complement;
    complement.reserve(b.width - b.accepting.size());
    for (std::size_t i = 0; i < b.width; ++i)
        if (!b.accepts_state(i)) complement.push_back(i);
    p.accepting = std::move(complement);
    p.name.clear();
    p.comment.clear();
    return p;
}

}  // namespace qobdd
