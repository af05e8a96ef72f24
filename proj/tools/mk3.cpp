// mk3: command-line front end for the MK3 surface toolkit. Links only the C API.

#include <mk3/mk3.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int fail(mk3_status st) {
    std::cerr << "error: " << mk3_status_name(st) << ": " << mk3_last_error() << "\n";
    return 1;
}

int emit(mk3_report* rep, bool json) {
    if (json) std::cout << mk3_report_json(rep) << "\n";
    else std::cout << mk3_report_text(rep);
    int code = mk3_report_exit_code(rep);
    mk3_report_free(rep);
    return code;
}

long long default_prime_bound() {
    if (const char* env = std::getenv("MK3_PRIME_BOUND")) {
        long long v = std::atoll(env);
        if (v >= 2) return v;
    }
    return 200;
}

int family_num(const std::string& f) {
    if (f == "f1" || f == "1") return 1;
    if (f == "f2" || f == "2") return 2;
    if (f == "f3" || f == "3") return 3;
    throw CLI::ValidationError("--family", "expected f1, f2 or f3");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local-global analysis of Markoff-type K3 surfaces"};
    app.require_subcommand(1);

    // hilbert <a> <b> <place>
    std::string h_a, h_b, h_place;
    auto* hilbert = app.add_subcommand("hilbert", "local Hilbert symbol (a,b)_v, printed as 0 or 1/2");
    hilbert->add_option("a", h_a)->required();
    hilbert->add_option("b", h_b)->required();
    hilbert->add_option("place", h_place, "a prime, or 'real'")->required();

    // search
    std::string s_family;
    long long s_k = 0, s_box = 20, s_height = 20;
    bool s_rational = false, s_json = false;
    auto* search = app.add_subcommand("search", "integral / rational point search up to a bound");
    search->add_option("--family", s_family)->required();
    search->add_option("--k", s_k)->required();
    search->add_option("--box", s_box, "integral box bound |x|,|y|,|z| <= B");
    search->add_flag("--rational", s_rational, "rational search instead of integral");
    search->add_option("--height", s_height, "height bound for --rational");
    search->add_flag("--json", s_json);

    // solvable
    std::string v_family, v_profile;
    long long v_k = 0, v_bound = default_prime_bound();
    bool v_json = false;
    auto* solvable = app.add_subcommand("solvable", "local solvability witnesses at all p <= bound");
    solvable->add_option("--family", v_family)->required();
    solvable->add_option("--k", v_k)->required();
    solvable->add_option("--prime-bound", v_bound);
    solvable->add_option("--profile", v_profile, "assumption profile certifying the tail");
    solvable->add_flag("--json", v_json);

    // obstruction
    std::string o_family, o_profile;
    long long o_ell = 0, o_k = 0, o_bound = default_prime_bound();
    int o_depth = 5;
    bool o_json = false, o_has_ell = false, o_has_k = false;
    auto* obstruction = app.add_subcommand("obstruction", "Brauer-Manin obstruction verdict");
    obstruction->add_option("--family", o_family)->required();
    auto* oell = obstruction->add_option("--ell", o_ell, "profile parameter ell");
    auto* okk = obstruction->add_option("--k", o_k, "direct k (family default classes)");
    obstruction->add_option("--profile", o_profile, "thm44|thm45|thm46|prop51|prop52");
    obstruction->add_option("--prime-bound", o_bound);
    obstruction->add_option("--depth", o_depth);
    obstruction->add_flag("--json", o_json);

    // sa-failure
    std::string sa_family;
    long long sa_k = 0;
    bool sa_json = false;
    auto* sa = app.add_subcommand("sa-failure", "strong approximation failure via two 2-adic witnesses");
    sa->add_option("--family", sa_family)->required();
    sa->add_option("--k", sa_k)->required();
    sa->add_flag("--json", sa_json);

    // rational-bm
    std::string rb_family, rb_profile;
    long long rb_ell = 0;
    bool rb_json = false;
    auto* rb = app.add_subcommand("rational-bm", "rational Brauer-Manin witness (adelic zero-sum selection)");
    rb->add_option("--family", rb_family)->required();
    rb->add_option("--ell", rb_ell)->required();
    rb->add_option("--profile", rb_profile);
    rb->add_flag("--json", rb_json);

    // picard
    bool p_verify = false, p_json = false;
    std::string p_dump;
    auto* picard = app.add_subcommand("picard", "Picard lattice, Galois action and H^1 verification");
    picard->add_flag("--verify", p_verify);
    picard->add_flag("--json", p_json);
    picard->add_option("--dump-dir", p_dump, "write gram/alt_gram/sigma/tau/rho as text matrices");

    // frobenius
    long long f_p = 5, f_kmod = 3;
    int f_maxn = 3;
    bool f_json = false;
    auto* frob = app.add_subcommand("frobenius", "point counts over F_{p^n} and the Frobenius charpoly");
    frob->add_option("--p", f_p);
    frob->add_option("--kmod", f_kmod);
    frob->add_option("--max-n", f_maxn);
    frob->add_flag("--json", f_json);

    // census
    std::string c_family, c_profile, c_out;
    long long c_M = 1000, c_bound = 50;
    int c_depth = 5;
    bool c_prime_ell = false, c_verify = false;
    auto* census = app.add_subcommand("census", "parameter census: sieve counts or verified Hasse failures");
    census->add_option("--family", c_family);
    census->add_option("--profile", c_profile, "profile for the sieve-only admissible count");
    census->add_option("--max-M", c_M)->required();
    census->add_option("--prime-bound", c_bound);
    census->add_option("--depth", c_depth);
    census->add_flag("--prime-ell", c_prime_ell);
    census->add_flag("--verify-obstruction", c_verify, "run solvability + obstruction per row");
    census->add_option("--out", c_out, "CSV output path (verified census)");

    CLI11_PARSE(app, argc, argv);

    mk3_status st;
    if (*hilbert) {
        int halves = 0;
        st = mk3_hilbert_symbol(h_a.c_str(), h_b.c_str(), h_place.c_str(), &halves);
        if (st != MK3_OK) return fail(st);
        std::cout << (halves ? "1/2" : "0") << "\n";
        return 0;
    }
    if (*search) {
        mk3_surface* s = nullptr;
        st = mk3_surface_new(family_num(s_family), s_k, &s);
        if (st != MK3_OK) return fail(st);
        mk3_report* rep = nullptr;
        st = s_rational ? mk3_search_rational(s, s_height, &rep) : mk3_search_integral(s, s_box, &rep);
        mk3_surface_free(s);
        if (st != MK3_OK) return fail(st);
        return emit(rep, s_json);
    }
    if (*solvable) {
        mk3_surface* s = nullptr;
        st = mk3_surface_new(family_num(v_family), v_k, &s);
        if (st != MK3_OK) return fail(st);
        mk3_report* rep = nullptr;
        st = mk3_solvable(s, v_bound, v_profile.empty() ? nullptr : v_profile.c_str(), &rep);
        mk3_surface_free(s);
        if (st != MK3_OK) return fail(st);
        return emit(rep, v_json);
    }
    if (*obstruction) {
        o_has_ell = oell->count() > 0;
        o_has_k = okk->count() > 0;
        if (o_has_ell == o_has_k) {
            std::cerr << "error: give exactly one of --ell / --k\n";
            return 1;
        }
        mk3_report* rep = nullptr;
        if (o_has_ell)
            st = mk3_obstruction(family_num(o_family), o_ell,
                                 o_profile.empty() ? nullptr : o_profile.c_str(), o_bound, o_depth, &rep);
        else
            st = mk3_obstruction_k(family_num(o_family), o_k, o_bound, o_depth, &rep);
        if (st != MK3_OK) return fail(st);
        return emit(rep, o_json);
    }
    if (*sa) {
        mk3_surface* s = nullptr;
        st = mk3_surface_new(family_num(sa_family), sa_k, &s);
        if (st != MK3_OK) return fail(st);
        mk3_report* rep = nullptr;
        st = mk3_sa_failure(s, &rep);
        mk3_surface_free(s);
        if (st != MK3_OK) return fail(st);
        return emit(rep, sa_json);
    }
    if (*rb) {
        mk3_report* rep = nullptr;
        st = mk3_rational_bm(family_num(rb_family), rb_ell,
                             rb_profile.empty() ? nullptr : rb_profile.c_str(), &rep);
        if (st != MK3_OK) return fail(st);
        return emit(rep, rb_json);
    }
    if (*picard) {
        if (!p_dump.empty()) {
            for (const char* nm : {"gram", "alt_gram", "sigma", "tau", "rho"}) {
                char* text = nullptr;
                st = mk3_picard_matrix(nm, &text);
                if (st != MK3_OK) return fail(st);
                std::ofstream out(p_dump + "/" + nm + ".txt");
                out << text;
                mk3_string_free(text);
            }
        }
        mk3_report* rep = nullptr;
        st = mk3_picard_verify(&rep);
        if (st != MK3_OK) return fail(st);
        return emit(rep, p_json);
    }
    if (*frob) {
        mk3_report* rep = nullptr;
        st = mk3_frobenius(f_p, f_kmod, f_maxn, &rep);
        if (st != MK3_OK) return fail(st);
        return emit(rep, f_json);
    }
    if (*census) {
        mk3_report* rep = nullptr;
        if (c_verify) {
            if (c_family.empty()) {
                std::cerr << "error: --verify-obstruction requires --family\n";
                return 1;
            }
            st = mk3_census_hasse(family_num(c_family), c_M, c_bound, c_depth, c_prime_ell ? 1 : 0,
                                  c_out.empty() ? nullptr : c_out.c_str(), &rep);
        } else {
            if (c_profile.empty()) {
                std::cerr << "error: sieve census requires --profile (or use --verify-obstruction)\n";
                return 1;
            }
            st = mk3_census_admissible(c_profile.c_str(), c_M, c_prime_ell ? 1 : 0, &rep);
        }
        if (st != MK3_OK) return fail(st);
        std::cout << mk3_report_json(rep) << "\n";
        int code = mk3_report_exit_code(rep);
        mk3_report_free(rep);
        return code;
    }
    return 1;
}
