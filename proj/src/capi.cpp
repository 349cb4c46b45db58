#include "dpc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "chain_complex.hpp"
#include "dold_puppe.hpp"
#include "gamma.hpp"
#include "honourable.hpp"
#include "ints.hpp"
#include "json.hpp"
#include "smith.hpp"
#include "tables.hpp"

struct dpc_complex {
    dp::ChainComplex c;
};

struct dpc_built {
    dp::DPComplex dp;
    dpc_complex chain;  // as_chain_complex(), for the borrowed view
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
dpc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const dp::validation_error& e) {
        g_error = e.what();
        return DPC_ERR_VALIDATE;
    } catch (const dp::limit_error& e) {
        g_error = e.what();
        return DPC_ERR_LIMIT;
    } catch (const dp::consistency_error& e) {
        g_error = e.what();
        return DPC_ERR_INTERNAL;
    } catch (const nlohmann::json::exception& e) {
        g_error = e.what();
        return DPC_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return DPC_ERR_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_error = e.what();
        return DPC_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_error = e.what();
        return DPC_ERR_INTERNAL;
    }
}

dpc_status fail_argument(const char* message) {
    g_error = message;
    return DPC_ERR_ARGUMENT;
}

dpc_status emit(const std::string& text, char** out) {
    *out = dup_string(text);
    if (!*out) {
        g_error = "out of memory";
        return DPC_ERR_INTERNAL;
    }
    return DPC_OK;
}

nlohmann::json matrix_json(const dp::IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const dp::Int& v = m.at(r, c);
            if (v >= std::numeric_limits<std::int64_t>::min() &&
                v <= std::numeric_limits<std::int64_t>::max())
                row.push_back(v.convert_to<std::int64_t>());
            else
                row.push_back(v.str());
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

extern "C" {

const char* dpc_last_error(void) { return g_error.c_str(); }

void dpc_free_string(char* s) { std::free(s); }

dpc_status dpc_complex_parse(const char* json, dpc_complex** out) {
    if (!json || !out) return fail_argument("dpc_complex_parse: null argument");
    return guarded([&] {
        auto c = dp::complex_from_json(json);
        c.validate();
        *out = new dpc_complex{std::move(c)};
        return DPC_OK;
    });
}

dpc_status dpc_complex_read_file(const char* path, dpc_complex** out) {
    if (!path || !out) return fail_argument("dpc_complex_read_file: null argument");
    std::ifstream in(path);
    if (!in) {
        g_error = std::string("cannot open file: ") + path;
        return DPC_ERR_ARGUMENT;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return dpc_complex_parse(buf.str().c_str(), out);
}

void dpc_complex_free(dpc_complex* c) { delete c; }

dpc_status dpc_complex_length(const dpc_complex* c, int* out) {
    if (!c || !out) return fail_argument("dpc_complex_length: null argument");
    *out = c->c.length();
    return DPC_OK;
}

dpc_status dpc_complex_rank(const dpc_complex* c, int degree, int64_t* out) {
    if (!c || !out) return fail_argument("dpc_complex_rank: null argument");
    *out = c->c.rank(degree);
    return DPC_OK;
}

dpc_status dpc_complex_to_json(const dpc_complex* c, char** out) {
    if (!c || !out) return fail_argument("dpc_complex_to_json: null argument");
    return guarded([&] { return emit(dp::complex_to_json(c->c), out); });
}

dpc_status dpc_table_text(int n, int k, char** out) {
    if (!out) return fail_argument("dpc_table_text: null argument");
    return guarded([&] { return emit(dp::table_text(n, k), out); });
}

dpc_status dpc_gamma_rank(const dpc_complex* c, int n, int64_t* out) {
    if (!c || !out) return fail_argument("dpc_gamma_rank: null argument");
    return guarded([&] {
        *out = dp::gamma_rank(c->c, n);
        return DPC_OK;
    });
}

dpc_status dpc_gamma_formula(int length, int n, int i, int is_face, char** out) {
    if (!out) return fail_argument("dpc_gamma_formula: null argument");
    return guarded([&] {
        dp::BlockMap bm =
            is_face ? dp::face_op(length, n, i) : dp::degeneracy_op(length, n, i);
        return emit(dp::formula(bm), out);
    });
}

dpc_status dpc_gamma_matrix(const dpc_complex* c, int n, int i, int is_face, char** out_json) {
    if (!c || !out_json) return fail_argument("dpc_gamma_matrix: null argument");
    return guarded([&] {
        dp::BlockMap bm = is_face ? dp::face_op(c->c.length(), n, i)
                                  : dp::degeneracy_op(c->c.length(), n, i);
        return emit(matrix_json(dp::as_matrix(bm, c->c)).dump(), out_json);
    });
}

dpc_status dpc_honourable_text(int n, int length, int degree, int minimal_only, int trace,
                               char** out) {
    if (!out) return fail_argument("dpc_honourable_text: null argument");
    return guarded([&] {
        if (n < 1) throw dp::validation_error("honourable: n must be >= 1");
        int top = (length <= 0) ? n : std::min(n, length);
        if (top < 1) throw dp::validation_error("honourable: length must leave room for sets");
        dp::SetP start = dp::default_start(top);
        std::ostringstream os;
        if (degree > 0) {
            auto minimal = dp::enumerate_minimal_honourable(n, start);
            int card = (length <= 0) ? n : length;
            for (const auto& fam : dp::complete_with_nonminimal(minimal, n, degree, card))
                os << dp::family_str(fam) << "\n";
        } else {
            auto entries = dp::enumerate_families(n, start);
            int idx = 0;
            for (const auto& e : entries) {
                ++idx;
                if (minimal_only && !e.honourable) continue;
                os << "T" << idx << " = "
                   << dp::family_str(e.family, trace ? &e.underlined : nullptr);
                if (e.honourable) os << "  [honourable]";
                os << "\n";
            }
        }
        return emit(os.str(), out);
    });
}

dpc_status dpc_build(const dpc_complex* c, const char* functor, dpc_built** out) {
    if (!c || !functor || !out) return fail_argument("dpc_build: null argument");
    return guarded([&] {
        dp::PolynomialFunctor f = dp::parse_functor(functor);
        auto built = dp::build(f, c->c);
        auto* b = new dpc_built{std::move(built), {}};
        b->chain.c = b->dp.as_chain_complex();
        *out = b;
        return DPC_OK;
    });
}

void dpc_built_free(dpc_built* b) { delete b; }

dpc_status dpc_built_summary(const dpc_built* b, char** out) {
    if (!b || !out) return fail_argument("dpc_built_summary: null argument");
    return guarded([&] { return emit(b->dp.summary(), out); });
}

dpc_status dpc_built_to_json(const dpc_built* b, char** out) {
    if (!b || !out) return fail_argument("dpc_built_to_json: null argument");
    return guarded([&] { return emit(b->dp.to_json(), out); });
}

dpc_status dpc_built_complex(const dpc_built* b, const dpc_complex** out) {
    if (!b || !out) return fail_argument("dpc_built_complex: null argument");
    *out = &b->chain;
    return DPC_OK;
}

namespace {

std::string homology_lines(const dp::ChainComplex& c, std::int64_t mod_p) {
    std::ostringstream os;
    for (int n = 0; n <= c.length(); ++n) {
        if (mod_p == 0) {
            os << "H_" << n << " = " << dp::homology_str(dp::homology(c, n)) << "\n";
        } else {
            std::int64_t dim = dp::homology_dim_mod_p(c, n, mod_p);
            os << "H_" << n << " = F_" << mod_p << "^" << dim << "\n";
        }
    }
    return os.str();
}

}  // namespace

dpc_status dpc_oracle_compare(const dpc_complex* c, const char* functor, char** report) {
    if (!c || !functor || !report) return fail_argument("dpc_oracle_compare: null argument");
    return guarded([&] {
        dp::PolynomialFunctor f = dp::parse_functor(functor);
        dp::DPComplex built = dp::build(f, c->c);
        dp::ChainComplex direct = built.as_chain_complex();
        dp::ChainComplex oracle =
            dp::quotient_oracle(f, c->c, built.input.length() * f.degree);

        std::ostringstream os;
        bool ok = true;
        os << "build ranks: ";
        for (auto r : direct.ranks) os << r << " ";
        os << "\noracle ranks:";
        for (auto r : oracle.ranks) os << " " << r;
        os << "\n";
        if (direct.ranks != oracle.ranks) ok = false;
        for (int n = 0; ok && n <= direct.length(); ++n) {
            dp::HomologyGroup a = dp::homology(direct, n);
            dp::HomologyGroup b = dp::homology(oracle, n);
            os << "H_" << n << ": build " << dp::homology_str(a) << ", oracle "
               << dp::homology_str(b) << "\n";
            if (!(a == b)) ok = false;
        }
        os << (ok ? "agreement: yes\n" : "agreement: NO\n");
        dpc_status st = emit(os.str(), report);
        if (st != DPC_OK) return st;
        if (!ok) {
            g_error = "oracle disagrees with build";
            return DPC_ERR_INTERNAL;
        }
        return DPC_OK;
    });
}

dpc_status dpc_homology_text(const dpc_complex* c, int64_t mod_p, char** out) {
    if (!c || !out) return fail_argument("dpc_homology_text: null argument");
    return guarded([&] { return emit(homology_lines(c->c, mod_p), out); });
}

}  // extern "C"
