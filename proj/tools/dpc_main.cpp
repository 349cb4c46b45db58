// Command-line frontend. Talks to the library through the C API only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "dpc.h"

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { dpc_free_string(s); }
};

struct ComplexHandle {
    dpc_complex* c = nullptr;
    ~ComplexHandle() { dpc_complex_free(c); }
};

struct BuiltHandle {
    dpc_built* b = nullptr;
    ~BuiltHandle() { dpc_built_free(b); }
};

// Internal-consistency failures exit 2, everything else user error 1.
int exit_code(dpc_status st) { return st == DPC_ERR_INTERNAL ? 2 : 1; }

int report(dpc_status st) {
    std::cerr << "error: " << dpc_last_error() << "\n";
    return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dold-Puppe complexes of chain complexes of free Z-modules"};
    app.require_subcommand(1);

    // tables
    auto* tables = app.add_subcommand("tables", "Occurrence table for Sur([n],[k])");
    int t_n = 0, t_k = 0;
    tables->add_option("--n", t_n, "level")->required();
    tables->add_option("--k", t_k, "inner degree")->required();

    // gamma
    auto* gamma = app.add_subcommand("gamma", "Face/degeneracy operators of Gamma(C.)");
    std::string g_file, g_op;
    int g_n = 0, g_i = 0, g_length = -1;
    bool g_matrix = false;
    gamma->add_option("--complex", g_file, "chain complex JSON file");
    gamma->add_option("--length", g_length, "complex length (formula only)");
    gamma->add_option("--n", g_n, "level")->required();
    gamma->add_option("--op", g_op, "face or degeneracy")->required()
        ->check(CLI::IsMember({"face", "degeneracy"}));
    gamma->add_option("--i", g_i, "operator index")->required();
    gamma->add_flag("--matrix", g_matrix, "print the full matrix (needs --complex)");

    // honourable
    auto* hon = app.add_subcommand("honourable", "Honourable family enumeration");
    int h_n = 0, h_length = 0, h_degree = 0;
    bool h_minimal = false, h_trace = false;
    hon->add_option("--n", h_n, "level")->required();
    hon->add_option("--length", h_length, "prune sets above this cardinality");
    hon->add_option("--degree", h_degree, "list completed families up to this size");
    hon->add_flag("--minimal-only", h_minimal, "only the honourable entries");
    hon->add_flag("--trace", h_trace, "show underline marks");

    // build
    auto* build = app.add_subcommand("build", "Dold-Puppe complex NFGamma(C.)");
    std::string b_functor, b_file, b_out;
    bool b_oracle = false, b_homology = false;
    build->add_option("--functor", b_functor, "sym:D, ext:D or tensor:D")->required();
    build->add_option("--complex", b_file, "chain complex JSON file")->required();
    build->add_option("--out", b_out, "write the result as JSON to this file");
    build->add_flag("--oracle", b_oracle, "cross-check against the quotient construction");
    build->add_flag("--homology", b_homology, "print homology of the result");

    // homology
    auto* hom = app.add_subcommand("homology", "Homology of a chain complex");
    std::string m_file;
    std::int64_t m_mod = 0;
    hom->add_option("--complex", m_file, "chain complex JSON file")->required();
    hom->add_option("--mod", m_mod, "prime p: report dimensions over F_p");

    CLI11_PARSE(app, argc, argv);

    if (tables->parsed()) {
        StringOut text;
        dpc_status st = dpc_table_text(t_n, t_k, &text.s);
        if (st != DPC_OK) return report(st);
        std::cout << text.s;
        return 0;
    }

    if (gamma->parsed()) {
        ComplexHandle c;
        if (!g_file.empty()) {
            dpc_status st = dpc_complex_read_file(g_file.c_str(), &c.c);
            if (st != DPC_OK) return report(st);
        } else if (g_matrix) {
            std::cerr << "error: --matrix needs --complex\n";
            return 1;
        }
        int length = g_length;
        if (length < 0) {
            if (c.c) dpc_complex_length(c.c, &length);
            else length = g_n;  // enough copies to show every block
        }
        int is_face = (g_op == "face") ? 1 : 0;
        StringOut formula;
        dpc_status st = dpc_gamma_formula(length, g_n, g_i, is_face, &formula.s);
        if (st != DPC_OK) return report(st);
        std::cout << (is_face ? "d_" : "s_") << g_i << " at n=" << g_n << ": " << formula.s
                  << "\n";
        if (g_matrix) {
            StringOut mat;
            st = dpc_gamma_matrix(c.c, g_n, g_i, is_face, &mat.s);
            if (st != DPC_OK) return report(st);
            std::cout << mat.s << "\n";
        }
        return 0;
    }

    if (hon->parsed()) {
        StringOut text;
        dpc_status st =
            dpc_honourable_text(h_n, h_length, h_degree, h_minimal ? 1 : 0, h_trace ? 1 : 0,
                                &text.s);
        if (st != DPC_OK) return report(st);
        std::cout << text.s;
        return 0;
    }

    if (build->parsed()) {
        ComplexHandle c;
        dpc_status st = dpc_complex_read_file(b_file.c_str(), &c.c);
        if (st != DPC_OK) return report(st);
        BuiltHandle b;
        st = dpc_build(c.c, b_functor.c_str(), &b.b);
        if (st != DPC_OK) return report(st);
        StringOut summary;
        st = dpc_built_summary(b.b, &summary.s);
        if (st != DPC_OK) return report(st);
        std::cout << summary.s;

        if (b_oracle) {
            StringOut rep;
            st = dpc_oracle_compare(c.c, b_functor.c_str(), &rep.s);
            if (rep.s) std::cout << rep.s;
            if (st != DPC_OK) return report(st);
        }
        if (b_homology) {
            const dpc_complex* view = nullptr;
            dpc_built_complex(b.b, &view);
            StringOut hom_text;
            st = dpc_homology_text(view, 0, &hom_text.s);
            if (st != DPC_OK) return report(st);
            std::cout << hom_text.s;
        }
        if (!b_out.empty()) {
            StringOut json;
            st = dpc_built_to_json(b.b, &json.s);
            if (st != DPC_OK) return report(st);
            std::ofstream out(b_out);
            if (!out) {
                std::cerr << "error: cannot write " << b_out << "\n";
                return 1;
            }
            out << json.s;
        }
        return 0;
    }

    if (hom->parsed()) {
        ComplexHandle c;
        dpc_status st = dpc_complex_read_file(m_file.c_str(), &c.c);
        if (st != DPC_OK) return report(st);
        StringOut text;
        st = dpc_homology_text(c.c, m_mod, &text.s);
        if (st != DPC_OK) return report(st);
        std::cout << text.s;
        return 0;
    }

    return 1;
}
