#include "gamma.hpp"

#include <algorithm>
#include <stdexcept>

#include "partitions.hpp"

namespace dp {

std::int64_t gamma_rank(const ChainComplex& c, int n) {
    if (n < 0) throw std::invalid_argument("gamma_rank: negative level");
    std::int64_t total = 0;
    for (int k = 0; k <= std::min(n, c.length()); ++k) total += binomial(n, k) * c.rank(k);
    return total;
}

std::int64_t gamma_offset(const ChainComplex& c, int n, int k, std::int64_t ordinal) {
    std::int64_t off = 0;
    for (int kk = std::min(n, c.length()); kk > k; --kk) off += binomial(n, kk) * c.rank(kk);
    return off + (ordinal - 1) * c.rank(k);
}

namespace {

void check_level(int n, int i, int lo, int hi, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": level must be >= 1");
    if (i < lo || i > hi) throw std::out_of_range(std::string(who) + ": i out of range");
}

}  // namespace

BlockMap degeneracy_op(int length, int n, int i) {
    check_level(n, i, 0, n - 1, "degeneracy_op");
    BlockMap bm{length, n - 1, n, {}};
    for (int k = 0; k <= std::min(n, length); ++k) {
        auto comp = s_set_complement(n, k, i);
        // l-th source copy lands on the l-th element of the complement of S^{n,k}_i
        for (std::int64_t m = 1; m <= binomial(n - 1, k); ++m)
            bm.entries.push_back({k, comp[m - 1], k, m, BlockTag::identity});
    }
    return bm;
}

namespace {

BlockMap face_op_zero(int length, int n) {
    BlockMap bm{length, n, n - 1, {}};
    for (int k = 0; k <= std::min(n - 1, length); ++k) {
        for (std::int64_t l = 1; l <= binomial(n - 1, k); ++l) {
            if (k + 1 <= std::min(n, length))
                bm.entries.push_back({k, l, k + 1, l, BlockTag::boundary});
            bm.entries.push_back({k, l, k, binomial(n - 1, k - 1) + l, BlockTag::identity});
        }
    }
    return bm;
}

BlockMap face_op_mid(int length, int n, int i) {
    BlockMap bm{length, n, n - 1, {}};
    for (int k = 0; k <= std::min(n - 1, length); ++k) {
        auto alpha = s_set_complement(n, k, i);       // pairs with Sur([n-1],[k]) in order
        auto s_prev = s_set(n - 1, k, i - 1);         // targets receiving a second term
        auto beta_all = s_set(n, k, i);               // minus the tilde part
        auto tilde = s_tilde_set(n, k, i);
        std::vector<std::int64_t> beta;
        std::set_difference(beta_all.begin(), beta_all.end(), tilde.begin(), tilde.end(),
                            std::back_inserter(beta));
        std::size_t m = 0;
        for (std::int64_t l = 1; l <= binomial(n - 1, k); ++l) {
            bm.entries.push_back({k, l, k, alpha[l - 1], BlockTag::identity});
            if (m < s_prev.size() && s_prev[m] == l) {
                bm.entries.push_back({k, l, k, beta[m], BlockTag::identity});
                ++m;
            }
        }
    }
    return bm;
}

BlockMap face_op_last(int length, int n) {
    BlockMap bm{length, n, n - 1, {}};
    for (int k = 0; k <= std::min(n - 1, length); ++k) {
        auto all = s_set(n, k, n);  // = Sur([n],[k])
        auto tilde = s_tilde_set(n, k, n);
        std::vector<std::int64_t> keep;
        std::set_difference(all.begin(), all.end(), tilde.begin(), tilde.end(),
                            std::back_inserter(keep));
        for (std::int64_t l = 1; l <= binomial(n - 1, k); ++l)
            bm.entries.push_back({k, l, k, keep[l - 1], BlockTag::identity});
    }
    return bm;
}

}  // namespace

BlockMap face_op(int length, int n, int i) {
    check_level(n, i, 0, n, "face_op");
    if (i == 0) return face_op_zero(length, n);
    if (i == n) return face_op_last(length, n);
    return face_op_mid(length, n, i);
}

IntMatrix as_matrix(const BlockMap& bm, const ChainComplex& c) {
    IntMatrix out(static_cast<std::size_t>(gamma_rank(c, bm.target_n)),
                  static_cast<std::size_t>(gamma_rank(c, bm.source_n)));
    for (const auto& e : bm.entries) {
        std::int64_t r0 = gamma_offset(c, bm.target_n, e.target_k, e.target_ordinal);
        std::int64_t c0 = gamma_offset(c, bm.source_n, e.source_k, e.source_ordinal);
        if (e.tag == BlockTag::identity) {
            for (std::int64_t v = 0; v < c.rank(e.source_k); ++v)
                out.at(r0 + v, c0 + v) += 1;
        } else {
            IntMatrix d = c.differential(e.source_k);
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t cc = 0; cc < d.cols(); ++cc)
                    if (d.at(r, cc) != 0) out.at(r0 + r, c0 + cc) += d.at(r, cc);
        }
    }
    return out;
}

namespace {

std::string copy_name(int n, int k, std::int64_t ordinal) {
    std::string s(1, static_cast<char>('a' + k));
    if (binomial(n, k) > 1) s += std::to_string(ordinal);
    return s;
}

}  // namespace

std::string formula(const BlockMap& bm) {
    std::string out = "(";
    bool first_group = true;
    for (int k = std::min(bm.target_n, bm.length); k >= 0; --k) {
        if (!first_group) out += "; ";
        first_group = false;
        for (std::int64_t l = 1; l <= binomial(bm.target_n, k); ++l) {
            if (l > 1) out += ",";
            std::string terms;
            for (const auto& e : bm.entries) {
                if (e.target_k != k || e.target_ordinal != l) continue;
                if (!terms.empty()) terms += "+";
                std::string nm = copy_name(bm.source_n, e.source_k, e.source_ordinal);
                terms += (e.tag == BlockTag::boundary) ? ("∂(" + nm + ")") : nm;
            }
            out += terms.empty() ? "0" : terms;
        }
    }
    return out + ")";
}

}  // namespace dp
