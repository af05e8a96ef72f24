#include "mk3/mk3.h"

#include "report.hpp"

#include <cstring>
#include <functional>
#include <sstream>

using namespace mk3;

struct mk3_surface {
    Surface s;
};

struct mk3_report {
    Json json;
    std::string json_str;
    std::string text;
    int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

mk3_status wrap(const std::function<void()>& fn) {
    try {
        fn();
        return MK3_OK;
    } catch (const precision_error& e) {
        g_last_error = e.what();
        return MK3_EPRECISION;
    } catch (const singular_point_error& e) {
        g_last_error = e.what();
        return MK3_ESINGULAR;
    } catch (const singular_reduction& e) {
        g_last_error = e.what();
        return MK3_ESINGULAR;
    } catch (const newton_condition_error& e) {
        g_last_error = e.what();
        return MK3_ENOTCERT;
    } catch (const factor_too_large& e) {
        g_last_error = e.what();
        return MK3_ETOOLARGE;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return MK3_ETOOLARGE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return MK3_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MK3_EINTERNAL;
    }
}

mk3_report* make_report(Json j, std::string text, int exit_code = 0) {
    auto* r = new mk3_report;
    r->json = std::move(j);
    r->json_str = r->json.dump(2);
    r->text = std::move(text);
    r->exit_code = exit_code;
    return r;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

FamilyId family_from_int(int family) {
    if (family < 1 || family > 3) throw std::invalid_argument("family must be 1, 2 or 3");
    return family == 1 ? FamilyId::F1 : family == 2 ? FamilyId::F2 : FamilyId::F3;
}

std::string obstruction_text(const ObstructionReport& rep) {
    std::ostringstream os;
    os << "surface " << family_name(rep.surface.family) << ", k = " << rep.surface.k.str() << "\n";
    if (rep.ell) os << "ell = " << rep.ell->str() << "\n";
    for (auto& pl : rep.places) {
        os << "  place " << pl.place << ": {";
        bool first = true;
        for (auto& v : pl.vectors) {
            if (!first) os << ", ";
            first = false;
            os << "(";
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << half_str(v[i]);
            os << ")";
        }
        os << "}" << (pl.stable ? "" : " [unstable]") << "\n";
    }
    os << "  tail certified: " << (rep.tail.certified ? "yes" : "no") << "\n";
    os << "verdict: " << verdict_name(rep.verdict) << "\n";
    return os.str();
}

}  // namespace

extern "C" {

const char* mk3_status_name(mk3_status s) {
    switch (s) {
        case MK3_OK: return "ok";
        case MK3_EINVAL: return "invalid argument";
        case MK3_EPRECISION: return "insufficient p-adic precision";
        case MK3_ESINGULAR: return "singular point";
        case MK3_ENOTCERT: return "Newton condition not satisfied";
        case MK3_ETOOLARGE: return "input beyond configured bounds";
        case MK3_EINTERNAL: return "internal error";
    }
    return "unknown";
}

const char* mk3_last_error(void) { return g_last_error.c_str(); }

const char* mk3_version(void) { return "1.0.0"; }

mk3_status mk3_surface_new(int family, long long k, mk3_surface** out) {
    return wrap([&] { *out = new mk3_surface{Surface{family_from_int(family), Int(k)}}; });
}

void mk3_surface_free(mk3_surface* s) { delete s; }

mk3_status mk3_surface_eval(const mk3_surface* s, const char* x, const char* y, const char* z,
                            char** out_value) {
    return wrap([&] {
        AffinePoint P{parse_rat(x), parse_rat(y), parse_rat(z)};
        *out_value = dup_string(to_string(evaluate(s->s, P)));
    });
}

void mk3_string_free(char* s) { delete[] s; }

mk3_status mk3_hilbert_symbol(const char* a, const char* b, const char* place, int* out_halves) {
    return wrap([&] {
        Place v = std::strcmp(place, "real") == 0 || std::strcmp(place, "inf") == 0
                      ? Place::real()
                      : Place::prime(Int(place));
        *out_halves = hilbert_symbol(parse_rat(a), parse_rat(b), v).halves;
    });
}

mk3_status mk3_product_formula_check(const char* a, const char* b, int* out_ok) {
    return wrap([&] { *out_ok = product_formula_check(parse_rat(a), parse_rat(b)) ? 1 : 0; });
}

const char* mk3_report_json(const mk3_report* r) { return r->json_str.c_str(); }
const char* mk3_report_text(const mk3_report* r) { return r->text.c_str(); }
int mk3_report_exit_code(const mk3_report* r) { return r->exit_code; }
void mk3_report_free(mk3_report* r) { delete r; }

mk3_status mk3_search_integral(const mk3_surface* s, long long box, mk3_report** out) {
    return wrap([&] {
        auto pts = integral_point_search(s->s, box);
        std::ostringstream os;
        for (auto& fp : pts)
            os << "{\"x\": " << to_string(fp.point.x) << ", \"y\": " << to_string(fp.point.y)
               << ", \"z\": " << to_string(fp.point.z) << ", \"orbit_size\": " << fp.orbit_size << "}\n";
        *out = make_report(search_json(s->s, pts, false), os.str());
    });
}

mk3_status mk3_search_rational(const mk3_surface* s, long long height, mk3_report** out) {
    return wrap([&] {
        auto pts = rational_point_search(s->s, height);
        std::ostringstream os;
        for (auto& fp : pts)
            os << "{\"x\": \"" << to_string(fp.point.x) << "\", \"y\": \"" << to_string(fp.point.y)
               << "\", \"z\": \"" << to_string(fp.point.z) << "\", \"orbit_size\": " << fp.orbit_size
               << "}\n";
        *out = make_report(search_json(s->s, pts, true), os.str());
    });
}

mk3_status mk3_solvable(const mk3_surface* s, long long prime_bound, const char* profile,
                        mk3_report** out) {
    return wrap([&] {
        std::optional<ProfileId> prof;
        if (profile && *profile) prof = parse_profile(profile);
        auto rep = everywhere_locally_solvable(s->s, prime_bound, prof);
        std::ostringstream os;
        os << "family " << family_name(s->s.family) << ", k = " << s->s.k.str() << ": "
           << (rep.solvable_up_to_bound ? "witnesses at every place up to " : "NOT locally solvable; failures up to ")
           << prime_bound << "\n";
        for (long long f : rep.failures) os << "  not locally solvable at p = " << f << "\n";
        os << rep.tail_note << "\n";
        *out = make_report(to_json(rep), os.str(), rep.solvable_up_to_bound ? 0 : 2);
    });
}

mk3_status mk3_assumption_check(const char* profile, long long value, int* out_pass,
                                char** out_first_violation) {
    return wrap([&] {
        auto res = assumption_check(parse_profile(profile), Int(value));
        *out_pass = res.pass ? 1 : 0;
        if (out_first_violation) *out_first_violation = dup_string(res.first_violation);
    });
}

mk3_status mk3_obstruction(int family, long long ell, const char* profile, long long prime_bound,
                           int depth, mk3_report** out) {
    return wrap([&] {
        FamilyId fam = family_from_int(family);
        ProfileId prof = profile && *profile ? parse_profile(profile) : default_obstruction_profile(fam);
        auto chk = assumption_check(prof, Int(ell));
        Int k = profile_k(prof, Int(ell));
        Surface s{fam, k};
        auto classes = obstruction_classes(prof, k);
        auto rep = obstruction_verdict(s, classes, prime_bound, depth, prof, Int(ell));
        if (!chk.pass && rep.note.empty())
            rep.note = "profile conditions not satisfied: " + chk.first_violation;
        Json j = to_json(rep);
        j["profile_pass"] = chk.pass;
        if (!chk.pass) j["profile_violation"] = chk.first_violation;
        *out = make_report(std::move(j), obstruction_text(rep), report_exit_code(rep));
    });
}

mk3_status mk3_obstruction_k(int family, long long k, long long prime_bound, int depth,
                             mk3_report** out) {
    return wrap([&] {
        FamilyId fam = family_from_int(family);
        ProfileId prof = default_obstruction_profile(fam);
        Surface s{fam, Int(k)};
        auto classes = obstruction_classes(prof, Int(k));
        auto rep = obstruction_verdict(s, classes, prime_bound, depth, std::nullopt, std::nullopt);
        *out = make_report(to_json(rep), obstruction_text(rep), report_exit_code(rep));
    });
}

mk3_status mk3_sa_failure(const mk3_surface* s, mk3_report** out) {
    return wrap([&] {
        auto classes = obstruction_classes(default_obstruction_profile(s->s.family), s->s.k);
        auto rep = strong_approximation_failure(s->s, classes[0]);
        std::ostringstream os;
        os << "family " << family_name(s->s.family) << ", k = " << s->s.k.str() << ": " << rep.note << "\n";
        *out = make_report(to_json(rep), os.str(), rep.failure_exhibited ? 0 : 2);
    });
}

mk3_status mk3_rational_bm(int family, long long ell, const char* profile, mk3_report** out) {
    return wrap([&] {
        FamilyId fam = family_from_int(family);
        ProfileId prof = profile && *profile ? parse_profile(profile) : default_obstruction_profile(fam);
        Int k = profile_k(prof, Int(ell));
        Surface s{fam, k};
        auto classes = obstruction_classes(prof, k);
        auto rep = rational_bm_witness(s, classes, prof);
        std::ostringstream os;
        os << "family " << family_name(fam) << ", k = " << k.str() << ": " << rep.note << "\n";
        *out = make_report(to_json(rep), os.str(), rep.witness_found ? 0 : 2);
    });
}

mk3_status mk3_picard_verify(mk3_report** out) {
    return wrap([&] {
        auto rep = lattice_verify();
        std::ostringstream os;
        os << "Gram determinant: " << rep.det.str() << "\n";
        os << "alternative basis determinant: " << rep.alt_det.str() << "\n";
        os << "signature: (" << rep.inertia[0] << "," << rep.inertia[1] << ")\n";
        os << "fiber quotient rank: " << rep.fiber_quotient.rank
           << (rep.fiber_quotient.torsion.empty() ? " (torsion-free)" : " (torsion!)") << "\n";
        auto h1s = [](const CohomologyResult& c) {
            std::string s = "(";
            for (size_t i = 0; i < c.invariant_factors.size(); ++i)
                s += (i ? "," : "") + c.invariant_factors[i].str();
            return s + ")";
        };
        os << "H1(G, Pic Wbar) invariant factors: " << h1s(rep.h1_picW) << "\n";
        os << "H1(G, Pic Ubar) invariant factors: " << h1s(rep.h1_picU) << "\n";
        for (auto& d : rep.discrepancies) os << "discrepancy: " << d << "\n";
        *out = make_report(to_json(rep), os.str());
    });
}

mk3_status mk3_picard_matrix(const char* name, char** out_text) {
    return wrap([&] {
        std::string nm = name;
        const PicardLattice& L = build_lattice();
        if (nm == "gram") {
            *out_text = dup_string(matrix_text(L.gram));
            return;
        }
        if (nm == "alt_gram") {
            auto alt = alternative_basis();
            IntMat g(alt.size(), IntVec(alt.size()));
            for (size_t i = 0; i < alt.size(); ++i)
                for (size_t j = 0; j < alt.size(); ++j) g[i][j] = geometric_pairing(alt[i], alt[j]);
            *out_text = dup_string(matrix_text(g));
            return;
        }
        const GroupAction& A = galois_action();
        if (nm == "sigma") *out_text = dup_string(matrix_text(A.sigma));
        else if (nm == "tau") *out_text = dup_string(matrix_text(A.tau));
        else if (nm == "rho") *out_text = dup_string(matrix_text(A.rho));
        else throw std::invalid_argument("unknown matrix name: " + nm);
    });
}

mk3_status mk3_frobenius(long long p, long long kmod, int max_n, mk3_report** out) {
    return wrap([&] {
        auto rep = frobenius_verify(p, kmod, max_n);
        std::ostringstream os;
        for (auto& [n, c] : rep.table.counts) os << "#W(F_" << p << "^" << n << ") = " << c << "\n";
        os << "f(t) = ";
        for (int d = 0; d <= 4; ++d) {
            const Rat& c = rep.charpoly.quotient[d];
            if (d) os << " + (" << to_string(c) << ") t^" << (4 - d);
            else os << "t^4";
        }
        os << "\nunity eigenvalues (full): " << rep.unity_roots_full << "\n";
        *out = make_report(to_json(rep), os.str());
    });
}

mk3_status mk3_census_admissible(const char* profile, long long M, int prime_ell, mk3_report** out) {
    return wrap([&] {
        auto rep = admissible_count(parse_profile(profile), M, prime_ell != 0);
        std::ostringstream os;
        os << "profile " << profile << ", M = " << M << ": count = " << rep.count << "\n";
        *out = make_report(to_json(rep), os.str());
    });
}

mk3_status mk3_census_hasse(int family, long long M, long long prime_bound, int depth, int prime_ell,
                            const char* csv_path, mk3_report** out) {
    return wrap([&] {
        auto rep = hasse_failure_census(family_from_int(family), M, prime_bound, depth, prime_ell != 0);
        if (csv_path && *csv_path) write_census_csv(rep, csv_path);
        std::ostringstream os;
        os << "rows: " << rep.rows.size() << ", solvable: " << rep.solvable_count
           << ", obstructed: " << rep.obstructed_count << ", inconclusive: " << rep.inconclusive_count
           << "\n";
        *out = make_report(to_json(rep), os.str());
    });
}

}  // extern "C"
