#include "smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

struct Reduction {
    IntMatrix U, Uinv, D, V, Vinv;

    explicit Reduction(const IntMatrix& m)
        : U(IntMatrix::identity(m.rows())),
          Uinv(IntMatrix::identity(m.rows())),
          D(m),
          V(IntMatrix::identity(m.cols())),
          Vinv(IntMatrix::identity(m.cols())) {}

    // row i of D += c * row j; U, Uinv updated to keep M = U*D*V
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t q = 0; q < D.cols(); ++q) D.at(i, q) += c * D.at(j, q);
        for (std::size_t q = 0; q < U.rows(); ++q) U.at(q, j) -= c * U.at(q, i);
        for (std::size_t q = 0; q < Uinv.cols(); ++q) Uinv.at(i, q) += c * Uinv.at(j, q);
    }

    void add_col(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t q = 0; q < D.rows(); ++q) D.at(q, i) += c * D.at(q, j);
        for (std::size_t q = 0; q < V.cols(); ++q) V.at(j, q) -= c * V.at(i, q);
        for (std::size_t q = 0; q < Vinv.rows(); ++q) Vinv.at(q, i) += c * Vinv.at(q, j);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        D.swap_rows(i, j);
        U.swap_cols(i, j);
        Uinv.swap_rows(i, j);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        D.swap_cols(i, j);
        V.swap_rows(i, j);
        Vinv.swap_cols(i, j);
    }

    void negate_row(std::size_t i) {
        for (std::size_t q = 0; q < D.cols(); ++q) D.at(i, q) = -D.at(i, q);
        for (std::size_t q = 0; q < U.rows(); ++q) U.at(q, i) = -U.at(q, i);
        for (std::size_t q = 0; q < Uinv.cols(); ++q) Uinv.at(i, q) = -Uinv.at(i, q);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    Reduction red(m);
    IntMatrix& D = red.D;
    std::size_t t = 0;
    std::size_t bound = std::min(D.rows(), D.cols());

    while (t < bound) {
        // minimal non-zero entry of the trailing submatrix
        std::size_t pr = t, pc = t;
        Int best = 0;
        for (std::size_t r = t; r < D.rows(); ++r)
            for (std::size_t c = t; c < D.cols(); ++c) {
                const Int& e = D.at(r, c);
                if (e == 0) continue;
                Int a = abs_int(e);
                if (best == 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                    if (best == 1) goto found;
                }
            }
        if (best == 0) break;
    found:
        red.swap_rows(t, pr);
        red.swap_cols(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < D.rows(); ++r) {
                if (D.at(r, t) == 0) continue;
                Int q = D.at(r, t) / D.at(t, t);
                if (q != 0) red.add_row(r, t, -q);
                if (D.at(r, t) != 0) {
                    red.swap_rows(t, r);  // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < D.cols(); ++c) {
                if (D.at(t, c) == 0) continue;
                Int q = D.at(t, c) / D.at(t, t);
                if (q != 0) red.add_col(c, t, -q);
                if (D.at(t, c) != 0) {
                    red.swap_cols(t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix (any unit does)
            if (D.at(t, t) != 1 && D.at(t, t) != -1)
                for (std::size_t r = t + 1; r < D.rows() && clean; ++r)
                    for (std::size_t c = t + 1; c < D.cols() && clean; ++c)
                        if (D.at(r, c) % D.at(t, t) != 0) {
                            red.add_row(t, r, 1);
                            clean = false;
                        }
        }
        if (D.at(t, t) < 0) red.negate_row(t);
        ++t;
    }

    SmithResult out;
    out.rank = t;
    for (std::size_t j = 0; j < t; ++j) out.invariant_factors.push_back(D.at(j, j));
    out.U = std::move(red.U);
    out.Uinv = std::move(red.Uinv);
    out.D = std::move(red.D);
    out.V = std::move(red.V);
    out.Vinv = std::move(red.Vinv);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    std::vector<std::size_t> rows(m.cols()), cols;
    for (std::size_t j = 0; j < m.cols(); ++j) rows[j] = j;
    for (std::size_t j = s.rank; j < m.cols(); ++j) cols.push_back(j);
    return s.Vinv.slice(rows, cols);
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::string homology_str(const HomologyGroup& h) {
    std::string s;
    if (h.free_rank > 0) {
        s = "Z";
        if (h.free_rank > 1) s += "^" + std::to_string(h.free_rank);
    }
    for (const Int& f : h.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + f.str();
    }
    return s.empty() ? "0" : s;
}

HomologyGroup homology(const ChainComplex& c, int n) {
    if (n < 0) throw std::invalid_argument("homology: negative degree");
    IntMatrix dn = c.differential(n);        // C_n -> C_{n-1}
    IntMatrix dn1 = c.differential(n + 1);   // C_{n+1} -> C_n
    if (!(dn * dn1).is_zero()) throw validation_error("homology: d o d != 0");

    SmithResult s = smith_normal_form(dn);
    std::size_t r = s.rank;
    // rows r.. of V*d_{n+1} express the image in a kernel basis
    IntMatrix vd = s.V * dn1;
    std::vector<std::size_t> rows, cols(vd.cols());
    for (std::size_t j = r; j < vd.rows(); ++j) rows.push_back(j);
    for (std::size_t j = 0; j < vd.cols(); ++j) cols[j] = j;
    IntMatrix x = vd.slice(rows, cols);

    SmithResult xs = smith_normal_form(x);
    HomologyGroup h;
    h.free_rank = static_cast<std::int64_t>(x.rows()) - static_cast<std::int64_t>(xs.rank);
    for (const Int& f : xs.invariant_factors)
        if (f > 1) h.torsion.push_back(f);
    return h;
}

namespace {

std::int64_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Int v = m.at(r, c) % p;
            if (v < 0) v += p;
            a[r][c] = v.convert_to<std::int64_t>();
        }
    std::int64_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[row]);
        // inverse of the pivot mod p
        std::int64_t inv = 1, base = a[row][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t q = 0; q < m.cols(); ++q) a[row][q] = a[row][q] * inv % p;
        for (std::size_t r2 = 0; r2 < m.rows(); ++r2) {
            if (r2 == row || a[r2][col] == 0) continue;
            std::int64_t f = a[r2][col];
            for (std::size_t q = 0; q < m.cols(); ++q)
                a[r2][q] = ((a[r2][q] - f * a[row][q]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

std::int64_t homology_dim_mod_p(const ChainComplex& c, int n, std::int64_t p) {
    if (p < 2) throw validation_error("homology: modulus must be a prime >= 2");
    if (p > (std::int64_t(1) << 31)) throw limit_error("homology: modulus too large");
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw validation_error("homology: modulus must be prime");
    IntMatrix dn = c.differential(n);
    IntMatrix dn1 = c.differential(n + 1);
    if (!(dn * dn1).is_zero()) throw validation_error("homology: d o d != 0");
    return c.rank(n) - rank_mod_p(dn, p) - rank_mod_p(dn1, p);
}

}  // namespace dp
