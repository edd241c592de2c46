#include "splitquat/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "splitquat/verification.hpp"

namespace splitquat {

namespace {

using nlohmann::json;

SplitQuaternion from_array(const std::array<double, 4>& v) {
    return {v[0], v[1], v[2], v[3]};
}

json quad_to_json(const SplitQuaternion& h) {
    return json::array({h.w, h.x, h.y, h.z});
}

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs) out.push_back(quad_to_json(c));
    return out;
}

json certificate_to_json(const Certificate& cert) {
    json jc;
    jc["norm_poly"] = json::array();
    for (int l = 0; l < 5; ++l) jc["norm_poly"].push_back(cert.norm_poly[static_cast<std::size_t>(l)]);

    if (cert.quartic_roots.empty()) {
        jc["quartic_roots"] = nullptr;
    } else {
        json roots = json::array();
        for (const auto& r : cert.quartic_roots) roots.push_back(json::array({r.real(), r.imag()}));
        jc["quartic_roots"] = roots;
    }

    if (cert.remainders.empty()) {
        jc["remainders"] = nullptr;
    } else {
        json rems = json::array();
        for (const auto& rem : cert.remainders) {
            json jr;
            jr["M"] = json::array({rem.M[0], rem.M[1], rem.M[2]});
            jr["classification"] = to_string(rem.cls);
            jr["ruling"] = rem.ruling ? json(to_string(*rem.ruling)) : json(nullptr);
            rems.push_back(jr);
        }
        jc["remainders"] = rems;
    }

    jc["segment_intersections"] =
        cert.segment_intersections ? json(*cert.segment_intersections) : json(nullptr);
    jc["line_intersections"] =
        cert.line_intersections ? json(*cert.line_intersections)
                                : (cert.line_on_quadric ? json("infinite") : json(nullptr));

    if (!cert.predicate_values.empty()) {
        json vals;
        for (const auto& [name, v] : cert.predicate_values) vals[name] = v;
        jc["values"] = vals;
    }
    if (cert.chosen_M)
        jc["chosen_M"] = json::array({(*cert.chosen_M)[0], (*cert.chosen_M)[1], (*cert.chosen_M)[2]});
    if (cert.common_zero_lambda_mu)
        jc["common_zero_lambda_mu"] =
            json::array({cert.common_zero_lambda_mu->first, cert.common_zero_lambda_mu->second});
    if (cert.reparametrization_shift) jc["shift"] = *cert.reparametrization_shift;
    if (!cert.note.empty()) jc["note"] = cert.note;
    return jc;
}

} // namespace

Report run(const JobSpec& job) {
    const auto t0 = std::chrono::steady_clock::now();

    Report report;
    report.job = job;
    const SplitQuaternion a = from_array(job.a);
    if (linf(a) == 0.0) throw std::invalid_argument("leading coefficient must be nonzero");
    report.input = Poly::quadratic(a, from_array(job.b), from_array(job.c));

    FactorizeOptions opts;
    opts.tol.eps = job.tolerance;
    opts.enumerate_all = job.enumerate_all;
    report.outcome = factorize(report.input, opts);
    report.exit_code = report.outcome.factorizable ? 0 : 1;

    if (job.verify) {
        report.oracle.ran = true;
        if (report.outcome.factorizable) {
            // Independent re-expansion of every witness is already recorded in
            // the residual fields; rerun the canonical one explicitly.
            report.oracle.residual =
                verify_product(report.input, report.outcome.witnesses.front().factors).max_abs;
            report.oracle.zero_found = true;
        } else {
            // Negative evidence: the numeric solver should find no zero of the
            // monic reduction either.
            try {
                auto [unit, monic] = monic_reduce(report.input, opts.tol);
                (void)unit;
                const SplitQuaternion b = monic[1];
                const double s = -b.w / 2.0;
                const Poly shifted = reparametrize(monic, s);
                SearchOptions sopts;
                sopts.seed = job.seed;
                auto zero = search_zero(vector_part(shifted[1]), shifted[0], sopts);
                report.oracle.zero_found = zero.has_value();
                if (zero) report.oracle.zero = *zero + SplitQuaternion{s};
            } catch (const LeadingCoefficientNotInvertible&) {
                report.oracle.ran = false;
            }
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

std::string to_json(const Report& report) {
    json j;
    j["input"] = {{"a", json(report.job.a)},
                  {"b", json(report.job.b)},
                  {"c", json(report.job.c)},
                  {"tolerance", report.job.tolerance}};
    j["case"] = to_string(report.outcome.label);
    j["factorizable"] = report.outcome.factorizable;

    json ws = json::array();
    for (const auto& w : report.outcome.witnesses) {
        json jw;
        jw["unit"] = quad_to_json(w.unit);
        jw["h1"] = quad_to_json(w.h1);
        jw["h2"] = quad_to_json(w.h2);
        jw["residual"] = w.residual;
        jw["unit_pos"] = to_string(w.unit_pos);
        json fs = json::array();
        for (const auto& f : w.factors) fs.push_back(poly_to_json(f));
        jw["factors"] = fs;
        ws.push_back(jw);
    }
    j["witnesses"] = ws;
    j["certificate"] = certificate_to_json(report.outcome.certificate);
    if (report.oracle.ran) {
        json jo;
        jo["zero_found"] = report.oracle.zero_found;
        if (report.outcome.factorizable)
            jo["reexpansion_residual"] = report.oracle.residual;
        else if (report.oracle.zero_found)
            jo["zero"] = quad_to_json(report.oracle.zero);
        j["oracle"] = jo;
    }
    j["exit"] = report.exit_code;
    return j.dump(2);
}

std::string to_text(const Report& report) {
    std::ostringstream os;
    os << "input:        " << report.input << "\n";
    os << "case:         " << to_string(report.outcome.label) << "\n";
    os << "factorizable: " << (report.outcome.factorizable ? "yes" : "no") << "\n";

    int index = 0;
    for (const auto& w : report.outcome.witnesses) {
        os << "witness[" << index++ << "]:  ";
        switch (w.unit_pos) {
            case UnitPos::Left:
                os << "(" << w.unit << ") * (t - (" << w.h1 << ")) * (t - (" << w.h2 << "))";
                break;
            case UnitPos::Middle:
                os << "(t - (" << w.h1 << ")) * (" << w.unit << ") * (t - (" << w.h2 << "))";
                break;
            case UnitPos::Right:
                os << "(t - (" << w.h1 << ")) * (t - (" << w.h2 << ")) * (" << w.unit << ")";
                break;
            case UnitPos::General: {
                bool first = true;
                for (const auto& f : w.factors) {
                    if (!first) os << " * ";
                    first = false;
                    os << "[" << f << "]";
                }
                break;
            }
        }
        os << "   residual " << w.residual << "\n";
    }

    const auto& cert = report.outcome.certificate;
    os << "norm poly:    ";
    {
        RealPoly np = cert.norm_poly;
        os << np << "\n";
    }
    if (!cert.quartic_roots.empty()) {
        os << "roots:        ";
        for (const auto& r : cert.quartic_roots) {
            os << "(" << r.real();
            if (r.imag() != 0.0) os << (r.imag() < 0 ? " - " : " + ") << std::abs(r.imag()) << "i";
            os << ") ";
        }
        os << "\n";
    }
    for (const auto& rem : cert.remainders) {
        os << "remainder:    M = " << rem.M << "  ->  " << to_string(rem.cls);
        if (rem.ruling) os << " (" << to_string(*rem.ruling) << ")";
        os << "\n";
    }
    for (const auto& [name, v] : cert.predicate_values)
        os << "value:        " << name << " = " << v << "\n";
    if (cert.chosen_M) os << "chosen M:     " << *cert.chosen_M << "\n";
    if (cert.common_zero_lambda_mu)
        os << "plane params: lambda = " << cert.common_zero_lambda_mu->first
           << ", mu = " << cert.common_zero_lambda_mu->second << "\n";
    if (cert.segment_intersections)
        os << "segment/null: " << *cert.segment_intersections << " intersection(s)\n";
    if (cert.line_intersections)
        os << "line/null:    " << *cert.line_intersections << " intersection(s)\n";
    else if (cert.line_on_quadric)
        os << "line/null:    line contained in the quadric\n";
    if (cert.reparametrization_shift)
        os << "shift:        t -> t + " << *cert.reparametrization_shift << "\n";
    if (!cert.note.empty()) os << "note:         " << cert.note << "\n";
    if (report.oracle.ran) {
        if (report.outcome.factorizable)
            os << "verify:       re-expansion residual " << report.oracle.residual << "\n";
        else
            os << "verify:       oracle zero found: " << (report.oracle.zero_found ? "YES (disagreement!)" : "no")
               << "\n";
    }
    os << "time:         " << report.elapsed_ms << " ms\n";
    os << "exit:         " << report.exit_code << "\n";
    return os.str();
}

} // namespace splitquat
