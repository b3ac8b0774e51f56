#pragma once

#include "ntb/classifier.hpp"
#include "ntb/oracle.hpp"
#include "ntb/trace.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ntb {

using ordered_json = nlohmann::ordered_json;

// Exit codes used by the command line driver.
inline constexpr int exit_agree = 0;
inline constexpr int exit_disagree = 2;
inline constexpr int exit_invalid = 3;
inline constexpr int exit_unsupported = 4;

struct Report {
    BundleMapData input;
    ModelOptions options;
    std::vector<std::string> validation_errors;
    MfResult mf;
    bool trace_run = false;
    TraceAnalysis trace;
    bool oracle_run = false;
    std::vector<FixedCircle> circles;
    // Circle count of the model's own two piece deformation when it exceeds
    // the minimal count realized by the straight deformation.
    std::optional<Int> deformation_circle_count;
    bool agree = false;
    int exit_code = exit_invalid;
};

// Runs the whole pipeline on one input: validation, classification, the
// minimal circle count, the algebraic trace and the geometric enumeration,
// and the agreement verdict between the three.
inline Report make_report(const BundleMapData& d, ModelOptions options = {}) {
    Report r;
    r.input = d;
    r.options = options;
    r.validation_errors = validate(d);
    if (!r.validation_errors.empty()) {
        r.exit_code = exit_invalid;
        return r;
    }
    r.mf = mf_number(d);
    switch (r.mf.status) {
        case MfStatus::Unclassified:
        case MfStatus::NotCoveredIVV:
        case MfStatus::FamilyNotListed:
            r.exit_code = exit_unsupported;
            return r;
        case MfStatus::FiberDeformable:
            // Count 0 with nothing to cross check: the two pipelines have no
            // model to run, so agreement holds over the defined quantities.
            r.agree = true;
            r.exit_code = exit_agree;
            return r;
        case MfStatus::Covered:
            break;
    }
    CellModel model = route_model(r.mf, options);
    r.trace = analyze(model);
    r.trace_run = true;
    r.circles = model_fixed_circles(model);
    r.oracle_run = true;
    if (model.kind == ModelKind::Triangulated) {
        Int own = Int(fixed_circles(model.homotopy).size());
        if (own != Int(r.circles.size())) r.deformation_circle_count = own;
    }
    r.agree = r.trace.nielsen == Int(r.circles.size()) && Int(r.circles.size()) == *r.mf.mf;
    r.exit_code = r.agree ? exit_agree : exit_disagree;
    return r;
}

namespace detail {

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline ordered_json json_int(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return to_ll(x);
    return x.str();
}

inline ordered_json json_mat(const IntMat2& m) {
    return ordered_json::array(
        {ordered_json::array({json_int(m.a11), json_int(m.a12)}),
         ordered_json::array({json_int(m.a21), json_int(m.a22)})});
}

inline const char* status_name(MfStatus s) {
    switch (s) {
        case MfStatus::Covered: return "covered";
        case MfStatus::FiberDeformable: return "fiber_deformable";
        case MfStatus::FamilyNotListed: return "family_not_listed";
        case MfStatus::NotCoveredIVV: return "not_covered";
        case MfStatus::Unclassified: return "unclassified";
    }
    return "?";
}

} // namespace detail

inline ordered_json to_json(const Report& r) {
    ordered_json j;
    j["input"] = {
        {"A", detail::json_mat(r.input.A)},
        {"B", detail::json_mat(r.input.B)},
        {"c", ordered_json::array({detail::json_int(r.input.c1), detail::json_int(r.input.c2)})},
    };
    j["options"] = {
        {"negative_helper_branch",
         r.options.y_branch == YNegBranch::Printed ? "printed" : "shifted"},
        {"matrix_source",
         r.options.source == MatrixSource::Tabulated ? "tabulated" : "rederived"},
    };
    j["validation"] = r.validation_errors;
    if (r.validation_errors.empty()) {
        ordered_json c;
        c["status"] = detail::status_name(r.mf.status);
        if (r.mf.cls.classified) {
            c["case"] = to_string(r.mf.cls.label);
            c["P"] = detail::json_mat(r.mf.cls.P);
            c["A_normal"] = detail::json_mat(r.mf.cls.A1);
            c["B_normal"] = detail::json_mat(r.mf.cls.B1);
            c["c_normal"] = ordered_json::array(
                {detail::json_int(r.mf.cls.c1), detail::json_int(r.mf.cls.c2)});
        }
        if (!r.mf.message.empty()) c["message"] = r.mf.message;
        j["classification"] = c;
        if (r.mf.mf) j["minimal_circle_count"] = detail::json_int(*r.mf.mf);
        if (r.mf.route) {
            j["model"] = {
                {"kind", *r.mf.route == ModelKind::Square ? "square" : "triangulated"},
                {"c1", detail::json_int(r.mf.route_c1)},
                {"c2", detail::json_int(r.mf.route_c2)},
                {"b4", detail::json_int(r.mf.route_b4)},
            };
        }
    }
    if (r.trace_run) {
        ordered_json cls = ordered_json::array();
        for (const auto& [c, index] : r.trace.indices)
            cls.push_back({{"marker", c.rep.to_string()}, {"index", detail::json_int(index)}});
        j["algebraic"] = {
            {"cycle", r.trace.cycle},
            {"nielsen_number", detail::json_int(r.trace.nielsen)},
            {"lefschetz_class", ordered_json::array({detail::json_int(r.trace.lefschetz[0]),
                                                     detail::json_int(r.trace.lefschetz[1])})},
            {"classes", cls},
        };
    }
    if (r.oracle_run) {
        ordered_json circ = ordered_json::array();
        for (const FixedCircle& c : r.circles)
            circ.push_back({{"t", detail::rat_str(c.t)}, {"y", detail::rat_str(c.y)}});
        ordered_json g;
        g["circle_count"] = detail::json_int(Int(r.circles.size()));
        g["circles"] = circ;
        if (r.deformation_circle_count)
            g["deformation_circle_count"] = detail::json_int(*r.deformation_circle_count);
        j["geometric"] = g;
    }
    ordered_json checked = ordered_json::array();
    if (r.trace_run && r.oracle_run) {
        checked.push_back("nielsen_number == circle_count");
        checked.push_back("circle_count == minimal_circle_count");
    }
    j["agreement"] = {{"agree", r.agree}, {"compared", checked}};
    j["exit_code"] = r.exit_code;
    return j;
}

inline std::string render_text(const Report& r) {
    std::string s;
    auto line = [&s](const std::string& l) {
        s += l;
        s += '\n';
    };
    line("input: A = " + r.input.A.to_string() + ", B = " + r.input.B.to_string() + ", c = (" +
         r.input.c1.str() + ", " + r.input.c2.str() + ")");
    if (!r.validation_errors.empty()) {
        for (const auto& e : r.validation_errors) line("invalid input: " + e);
        return s;
    }
    std::string c = std::string("classification: ") + detail::status_name(r.mf.status);
    if (r.mf.cls.classified)
        c += ", case " + to_string(r.mf.cls.label) + " via P = " + r.mf.cls.P.to_string() +
             ", normal A = " + r.mf.cls.A1.to_string() + ", B = " + r.mf.cls.B1.to_string() +
             ", c = (" + r.mf.cls.c1.str() + ", " + r.mf.cls.c2.str() + ")";
    line(c);
    if (!r.mf.message.empty()) line("note: " + r.mf.message);
    if (r.mf.mf) line("minimal circle count: " + r.mf.mf->str());
    if (r.mf.route)
        line("model: " + std::string(*r.mf.route == ModelKind::Square ? "square" : "triangulated") +
             " with c1 = " + r.mf.route_c1.str() + ", c2 = " + r.mf.route_c2.str() +
             ", b4 = " + r.mf.route_b4.str());
    if (r.trace_run) {
        line("algebraic: Nielsen number " + r.trace.nielsen.str() + ", Lefschetz class (" +
             r.trace.lefschetz[0].str() + ", " + r.trace.lefschetz[1].str() + ")");
        for (const auto& [cls, index] : r.trace.indices)
            line("  class of " + cls.rep.to_string() + ": index " + index.str());
    }
    if (r.oracle_run) {
        line("geometric: " + std::to_string(r.circles.size()) + " fixed circles");
        for (const FixedCircle& fc : r.circles)
            line("  t = " + detail::rat_str(fc.t) + ", y = " + detail::rat_str(fc.y));
        if (r.deformation_circle_count)
            line("  (the model deformation itself carries " +
                 r.deformation_circle_count->str() + " circles before minimization)");
    }
    line(std::string("agreement: ") + (r.agree ? "yes" : "no"));
    return s;
}

} // namespace ntb
