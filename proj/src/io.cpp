#include "zdeform/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zdeform/version.hpp"

namespace zdeform {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    return fmt("%.17g", v);
}

std::string fmt9(double v) {
    if (std::isnan(v)) return "nan";
    return fmt("%.9g", v);
}

std::string fmt3(double v) { return fmt("%.3f", v); }

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

void JsonWriter::comma() {
    if (!first_in_scope_.empty() && !pending_key_) {
        if (!first_in_scope_.back()) out_ += ",";
        first_in_scope_.back() = false;
    }
    pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += "{";
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += "}";
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += "[";
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += "]";
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    comma();
    out_ += "\"" + escape_json(k) + "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    comma();
    if (std::isfinite(v)) out_ += fmt17(v); else out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    comma();
    out_ += "\"" + escape_json(v) + "\"";
    return *this;
}

JsonWriter& JsonWriter::value_raw(const std::string& text) {
    comma();
    out_ += text;
    return *this;
}

JsonWriter& JsonWriter::null() {
    comma();
    out_ += "null";
    return *this;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

namespace {

void write_curves(JsonWriter& w, const char* key, const std::vector<IsoCurve>& curves,
                  const char* level_key, const char* param_key) {
    w.key(key).begin_array();
    for (const IsoCurve& c : curves) {
        w.begin_object();
        w.key(level_key).value(c.level);
        w.key("vertices").begin_array();
        for (const GridVertex& v : c.vertices) {
            w.begin_object();
            w.key(param_key).value(v.param);
            w.key("K").value(v.K);
            w.key("B").value(v.B);
            w.end_object();
        }
        w.end_array();
        w.key("skipped").begin_array();
        for (const SkippedVertex& s : c.skipped) {
            w.begin_object();
            w.key(param_key).value(s.param);
            w.key("reason").value(s.reason);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
}

}  // namespace

std::string grid_to_json(const DeformationGrid& g) {
    JsonWriter w;
    w.begin_object();
    w.key("form").value(g.form_name);
    if (!g.variant.empty()) w.key("variant").value(g.variant);
    w.key("k_values").begin_array();
    for (double k : g.k_values) w.value(k);
    w.end_array();
    w.key("b_values").begin_array();
    for (double b : g.b_values) w.value(b);
    w.end_array();
    w.key("samples_per_curve").value(g.samples_per_curve);
    w.key("theta_max").value(g.theta_max);

    write_curves(w, "iso_k_curves", g.iso_k_curves, "k", "b");
    write_curves(w, "iso_b_curves", g.iso_b_curves, "b", "k");

    w.key("boundary").begin_object();
    w.key("points").begin_array();
    for (const BoundaryPoint& p : g.boundary.points) {
        w.begin_object();
        w.key("theta").value(p.theta);
        w.key("K").value(p.K);
        w.key("B").value(p.B);
        w.end_object();
    }
    w.end_array();
    w.key("skipped").begin_array();
    for (const SkippedTheta& s : g.boundary.skipped) {
        w.begin_object();
        w.key("theta").value(s.theta);
        w.key("reason").value(s.reason);
        w.end_object();
    }
    w.end_array();
    if (g.has_boundary_max) {
        w.key("max_K").begin_object();
        w.key("theta").value(g.boundary_max.theta);
        w.key("K").value(g.boundary_max.K);
        w.key("B").value(g.boundary_max.B);
        w.end_object();
    }
    w.end_object();

    w.key("nodes").begin_array();
    for (const GridNode& n : g.nodes) {
        w.begin_object();
        w.key("k").value(n.k);
        w.key("b").value(n.b);
        w.key("K").value(n.K);
        w.key("B").value(n.B);
        w.key("representable").value(n.representable);
        w.key("stable").value(n.stable);
        if (n.has_metrics) {
            w.key("jacobian").begin_array();
            w.value(n.metrics.jacobian[0][0]).value(n.metrics.jacobian[0][1]);
            w.value(n.metrics.jacobian[1][0]).value(n.metrics.jacobian[1][1]);
            w.end_array();
            w.key("identity_deviation").value(n.metrics.identity_deviation);
            w.key("orthogonality_angle_deg").value(n.metrics.orthogonality_angle_deg);
            w.key("sigma1").value(n.metrics.sigma1);
            w.key("sigma2").value(n.metrics.sigma2);
        }
        if (!n.reason.empty()) w.key("reason").value(n.reason);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

std::string grid_to_csv(const DeformationGrid& g) {
    std::string out = "k,b,K,B,stable,representable,identity_deviation,orthogonality_angle_deg\n";
    for (const GridNode& n : g.nodes) {
        out += fmt9(n.k) + "," + fmt9(n.b) + "," + fmt9(n.K) + "," + fmt9(n.B) + ",";
        out += n.stable ? "true" : "false";
        out += ",";
        out += n.representable ? "true" : "false";
        out += ",";
        out += n.has_metrics ? fmt9(n.metrics.identity_deviation) : "nan";
        out += ",";
        out += n.has_metrics ? fmt9(n.metrics.orthogonality_angle_deg) : "nan";
        out += "\n";
    }
    return out;
}

namespace {

struct Viewport {
    double k_min, k_max, b_min, b_max;
    static constexpr double width = 800.0, height = 600.0, margin = 60.0;

    double x(double K) const {
        return margin + (K - k_min) / (k_max - k_min) * (width - 2.0 * margin);
    }
    double y(double B) const {
        return height - margin - (B - b_min) / (b_max - b_min) * (height - 2.0 * margin);
    }
};

void emit_polyline(std::string& svg, const Viewport& vp, const std::vector<GridVertex>& vertices,
                   const char* cls, double b_shift) {
    if (vertices.size() < 2) return;
    svg += "  <polyline class=\"" + std::string(cls) + "\" points=\"";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) svg += " ";
        svg += fmt3(vp.x(vertices[i].K)) + "," + fmt3(vp.y(vertices[i].B + b_shift));
    }
    svg += "\"/>\n";
}

// A skipped sweep point breaks the curve into separate polylines; no segment
// is drawn across the gap.
void emit_curve(std::string& svg, const Viewport& vp, const IsoCurve& curve, const char* cls,
                double b_shift) {
    std::vector<GridVertex> segment;
    auto broken_between = [&curve](double p0, double p1) {
        for (const SkippedVertex& s : curve.skipped)
            if (s.param > p0 && s.param < p1) return true;
        return false;
    };
    for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
        if (!segment.empty() && broken_between(segment.back().param, curve.vertices[i].param)) {
            emit_polyline(svg, vp, segment, cls, b_shift);
            segment.clear();
        }
        segment.push_back(curve.vertices[i]);
    }
    emit_polyline(svg, vp, segment, cls, b_shift);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string grid_to_svg(const DeformationGrid& g, const SvgOptions& opt) {
    double b_shift = opt.b_axis_total ? opt.b0 : 0.0;

    // data bounding box over everything drawable
    double k_lo = 0.0, k_hi = 1.0, b_lo = 0.0, b_hi = 1.0;
    bool seen = false;
    auto take = [&](double K, double B) {
        if (!std::isfinite(K) || !std::isfinite(B)) return;
        if (!seen) {
            k_lo = k_hi = K;
            b_lo = b_hi = B;
            seen = true;
            return;
        }
        k_lo = std::min(k_lo, K);
        k_hi = std::max(k_hi, K);
        b_lo = std::min(b_lo, B);
        b_hi = std::max(b_hi, B);
    };
    for (const auto& c : g.iso_k_curves)
        for (const auto& v : c.vertices) take(v.K, v.B + b_shift);
    for (const auto& c : g.iso_b_curves)
        for (const auto& v : c.vertices) take(v.K, v.B + b_shift);
    for (const auto& p : g.boundary.points) take(p.K, p.B + b_shift);
    if (opt.show_reference) {
        for (double k : g.k_values) take(k, 0.0);
        for (double b : g.b_values) take(0.0, b + b_shift);
    }
    if (!seen || k_hi == k_lo) k_hi = k_lo + 1.0;
    if (!seen || b_hi == b_lo) b_hi = b_lo + 1.0;

    Viewport vp{k_lo, k_hi, b_lo, b_hi};
    std::string svg;
    svg +=
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
    svg += "  <style>\n";
    svg += "    .iso-k { fill: none; stroke: #1f77b4; stroke-width: 1; }\n";
    svg += "    .iso-b { fill: none; stroke: #2ca02c; stroke-width: 1; }\n";
    svg += "    .boundary { fill: none; stroke: #d62728; stroke-width: 2.5; }\n";
    svg += "    .refgrid { fill: none; stroke: #999999; stroke-width: 0.75; "
           "stroke-dasharray: 4 3; }\n";
    svg += "    .axis { stroke: #000000; stroke-width: 1; }\n";
    svg += "    .label { font: 13px sans-serif; fill: #000000; }\n";
    svg += "  </style>\n";

    if (opt.show_reference) {
        for (double k : g.k_values) {
            svg += "  <line class=\"refgrid\" x1=\"" + fmt3(vp.x(k)) + "\" y1=\"" +
                   fmt3(vp.y(b_lo)) + "\" x2=\"" + fmt3(vp.x(k)) + "\" y2=\"" + fmt3(vp.y(b_hi)) +
                   "\"/>\n";
        }
        for (double b : g.b_values) {
            svg += "  <line class=\"refgrid\" x1=\"" + fmt3(vp.x(k_lo)) + "\" y1=\"" +
                   fmt3(vp.y(b + b_shift)) + "\" x2=\"" + fmt3(vp.x(k_hi)) + "\" y2=\"" +
                   fmt3(vp.y(b + b_shift)) + "\"/>\n";
        }
    }

    for (const auto& c : g.iso_k_curves) emit_polyline(svg, vp, c.vertices, "iso-k", b_shift);
    for (const auto& c : g.iso_b_curves) emit_polyline(svg, vp, c.vertices, "iso-b", b_shift);

    if (g.boundary.points.size() >= 2) {
        std::vector<GridVertex> bp;
        bp.reserve(g.boundary.points.size());
        for (const auto& p : g.boundary.points) bp.push_back({p.theta, p.K, p.B});
        emit_polyline(svg, vp, bp, "boundary", b_shift);
    }

    // axes along the viewport frame
    svg += "  <line class=\"axis\" x1=\"60\" y1=\"540\" x2=\"740\" y2=\"540\"/>\n";
    svg += "  <line class=\"axis\" x1=\"60\" y1=\"60\" x2=\"60\" y2=\"540\"/>\n";
    svg += "  <text class=\"label\" x=\"730\" y=\"565\">K</text>\n";
    svg += "  <text class=\"label\" x=\"30\" y=\"70\">" +
           std::string(opt.b_axis_total ? "B+b0" : "B") + "</text>\n";
    svg += "  <text class=\"label\" x=\"60\" y=\"558\">" + fmt3(k_lo) + "</text>\n";
    svg += "  <text class=\"label\" x=\"700\" y=\"558\">" + fmt3(k_hi) + "</text>\n";
    svg += "  <text class=\"label\" x=\"8\" y=\"544\">" + fmt3(b_lo) + "</text>\n";
    svg += "  <text class=\"label\" x=\"8\" y=\"64\">" + fmt3(b_hi) + "</text>\n";
    svg += "  <text class=\"label\" x=\"60\" y=\"40\">" + escape_json(g.form_name) +
           (g.variant.empty() ? "" : " (" + g.variant + ")") + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

std::string manifest_to_json(const std::string& command_line, const std::string& config_hash,
                             const std::vector<ManifestEntry>& outputs,
                             const std::string& timestamp) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value(command_line);
    w.key("config_hash").value(config_hash);
    w.key("tool_version").value(kVersion);
    w.key("outputs").begin_array();
    for (const ManifestEntry& e : outputs) {
        w.begin_object();
        w.key("file").value(e.file);
        w.key("hash").value(e.hash);
        w.end_object();
    }
    w.end_array();
    w.key("timestamp").value(timestamp);
    w.end_object();
    return w.str() + "\n";
}

namespace {

void write_pole_list(JsonWriter& w, const char* key, const std::vector<Complex>& poles) {
    w.key(key).begin_array();
    for (const Complex& z : poles) {
        w.begin_object();
        w.key("re").value(z.real());
        w.key("im").value(z.imag());
        w.key("modulus").value(std::abs(z));
        w.end_object();
    }
    w.end_array();
}

}  // namespace

std::string cross_check_to_json(const CrossCheckReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("form").value(r.form_name);
    w.key("K").value(r.params.K);
    w.key("B").value(r.params.B);
    write_pole_list(w, "roots_direct", r.roots_direct);
    write_pole_list(w, "roots_eigen", r.roots_eigen);
    write_pole_list(w, "roots_identified", r.roots_identified);
    w.key("identified_order").value(r.identified_order);
    w.key("used_fallback_state").value(r.used_fallback_state);
    w.key("max_diff_direct_eigen").value(r.max_diff_direct_eigen);
    w.key("max_diff_direct_identified").value(r.max_diff_direct_identified);
    w.key("representable").value(r.representable);
    if (r.representable) {
        w.key("kb_direct").begin_object();
        w.key("k").value(r.kb_direct.k);
        w.key("b").value(r.kb_direct.b);
        w.end_object();
        w.key("kb_eigen").begin_object();
        w.key("k").value(r.kb_eigen.k);
        w.key("b").value(r.kb_eigen.b);
        w.end_object();
        w.key("kb_discrepancy").value(r.kb_discrepancy);
    }
    if (r.variant_gap) {
        w.key("variant_gap").begin_object();
        w.key("as_printed").begin_object();
        w.key("k").value(r.variant_gap->as_printed.k);
        w.key("b").value(r.variant_gap->as_printed.b);
        w.end_object();
        w.key("reconstructed").begin_object();
        w.key("k").value(r.variant_gap->reconstructed.k);
        w.key("b").value(r.variant_gap->reconstructed.b);
        w.end_object();
        w.key("gap").value(r.variant_gap->gap);
        w.end_object();
    }
    w.key("pass_eigen").value(r.pass_eigen);
    w.key("pass_identified").value(r.pass_identified);
    w.key("pass").value(r.pass);
    if (!r.note.empty()) w.key("note").value(r.note);
    w.end_object();
    return w.str() + "\n";
}

std::string table1_to_json(const Table1Report& r) {
    JsonWriter w;
    w.begin_object();
    w.key("omega_I").value(r.omega_I);
    w.key("omega_II").value(r.omega_II);
    w.key("omega_III").value(r.omega_III);
    w.key("omega_IV").value(r.omega_IV);
    w.key("omega_V").value(r.omega_V);
    w.key("detuning_IV").value(r.detuning_IV);
    w.key("detuning_V").value(r.detuning_V);
    w.key("K_used").value(r.K_used);
    w.key("hold").value(std::string(hold_model_name(r.hold)));
    w.end_object();
    return w.str() + "\n";
}

std::string table1_to_text(const Table1Report& r) {
    std::ostringstream os;
    auto row = [&os](const char* name, const char* desc, double omega) {
        os << "  " << name << "  " << desc;
        for (std::size_t i = std::string(desc).size(); i < 44; ++i) os << ' ';
        os << fmt9(omega) << "\n";
    };
    os << "system  assembly                                    omega\n";
    row("I  ", "real mass + real spring k", r.omega_I);
    row("II ", "real mass + tuned virtual spring K", r.omega_II);
    row("III", "real mass + real springs 2k", r.omega_III);
    row("IV ", "real mass + virtual springs 2K", r.omega_IV);
    row("V  ", "real mass + real k + virtual K", r.omega_V);
    os << "K_used = " << fmt9(r.K_used) << "  hold = " << hold_model_name(r.hold) << "\n";
    os << "detuning IV vs III = " << fmt9(100.0 * r.detuning_IV) << "%\n";
    os << "detuning V  vs III = " << fmt9(100.0 * r.detuning_V) << "%\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace zdeform
