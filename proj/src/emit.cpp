#include "mcf/emit.hpp"

#include <cmath>
#include <cstdio>

namespace mcf {

namespace {

bool needs_quoting(const std::string& f) {
    return f.find_first_of(",\"\n\r") != std::string::npos;
}

void append_field(std::string& out, const std::string& f) {
    if (!needs_quoting(f)) {
        out += f;
        return;
    }
    out += '"';
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

void append_row(std::string& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        append_field(out, row[i]);
    }
    out += '\n';
}

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    append_row(out, header);
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw DomainError("ragged CSV row: expected " + std::to_string(header.size()) +
                              " fields, got " + std::to_string(row.size()));
        append_row(out, row);
    }
    return out;
}

std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string write_svg(const Scene& scene) {
    const double w = scene.width, h = scene.height;
    auto mapx = [w](double x) { return x * w; };
    auto mapy = [h](double y) { return (1.0 - y) * h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(scene.width) + "\" height=\"" + std::to_string(scene.height) +
           "\" viewBox=\"0 0 " + std::to_string(scene.width) + " " +
           std::to_string(scene.height) + "\">\n";
    for (const auto& el : scene.elements) {
        if (const auto* p = std::get_if<Scene::Polygon>(&el)) {
            out += "  <polygon points=\"";
            for (std::size_t i = 0; i < p->points.size(); ++i) {
                if (i) out += ' ';
                out += svg_coord(mapx(p->points[i].first)) + "," +
                       svg_coord(mapy(p->points[i].second));
            }
            out += "\" fill=\"" + p->fill + "\" stroke=\"" + p->stroke + "\"/>\n";
        } else if (const auto* d = std::get_if<Scene::Dot>(&el)) {
            out += "  <circle cx=\"" + svg_coord(mapx(d->x)) + "\" cy=\"" +
                   svg_coord(mapy(d->y)) + "\" r=\"" + svg_coord(d->radius * w) + "\" fill=\"" +
                   d->fill + "\"/>\n";
        } else if (const auto* t = std::get_if<Scene::Label>(&el)) {
            out += "  <text x=\"" + svg_coord(mapx(t->x)) + "\" y=\"" + svg_coord(mapy(t->y)) +
                   "\" fill=\"" + t->fill + "\" font-size=\"12\">" + xml_escape(t->text) +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

namespace {

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string stat_cell(double value, double std_dev) {
    return format_significant(value) + " (" + format_significant(std_dev, 2) + ")";
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += pad(row[i], widths[i]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace

std::string write_table_text(const LyapunovTable& t) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({t.algorithm + " (" + std::to_string(t.n_success) + "/" +
                        std::to_string(t.n_orbits) + " successful orbits, " +
                        std::to_string(t.n_iterations) + " iterations)",
                    "min", "mean", "max", "std"});
    auto quantity = [&rows](const char* name, const Stats& s) {
        rows.push_back({name, format_significant(s.min), format_significant(s.mean),
                        format_significant(s.max), format_significant(s.std_dev, 2)});
    };
    quantity("theta1", t.theta1);
    quantity("theta2", t.theta2);
    quantity("1-theta2/theta1", t.ratio);
    return render_columns(rows);
}

std::string write_comparison_text(const std::vector<LyapunovTable>& tables) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Algorithm", "#Orbits", "theta1 (std)", "theta2 (std)",
                    "1-theta2/theta1 (std)"});
    for (const auto& t : tables)
        rows.push_back({t.algorithm, std::to_string(t.n_success),
                        stat_cell(t.theta1.mean, t.theta1.std_dev),
                        stat_cell(t.theta2.mean, t.theta2.std_dev),
                        stat_cell(t.ratio.mean, t.ratio.std_dev)});
    return render_columns(rows);
}

void to_json(nlohmann::json& j, const Stats& s) {
    j = {{"min", s.min}, {"mean", s.mean}, {"max", s.max}, {"std", s.std_dev}};
}

void from_json(const nlohmann::json& j, Stats& s) {
    j.at("min").get_to(s.min);
    j.at("mean").get_to(s.mean);
    j.at("max").get_to(s.max);
    j.at("std").get_to(s.std_dev);
}

void to_json(nlohmann::json& j, const LyapunovEstimate& e) {
    j = {{"theta1", e.theta1},
         {"theta2", e.theta2},
         {"ratio", e.ratio},
         {"iterations", e.iterations},
         {"success", e.success}};
}

void from_json(const nlohmann::json& j, LyapunovEstimate& e) {
    j.at("theta1").get_to(e.theta1);
    j.at("theta2").get_to(e.theta2);
    j.at("ratio").get_to(e.ratio);
    j.at("iterations").get_to(e.iterations);
    j.at("success").get_to(e.success);
}

void to_json(nlohmann::json& j, const LyapunovTable& t) {
    j = {{"algorithm", t.algorithm}, {"n_orbits", t.n_orbits},
         {"n_success", t.n_success}, {"n_iterations", t.n_iterations},
         {"theta1", t.theta1},       {"theta2", t.theta2},
         {"ratio", t.ratio}};
}

void from_json(const nlohmann::json& j, LyapunovTable& t) {
    j.at("algorithm").get_to(t.algorithm);
    j.at("n_orbits").get_to(t.n_orbits);
    j.at("n_success").get_to(t.n_success);
    j.at("n_iterations").get_to(t.n_iterations);
    j.at("theta1").get_to(t.theta1);
    j.at("theta2").get_to(t.theta2);
    j.at("ratio").get_to(t.ratio);
}

void to_json(nlohmann::json& j, const SimplexHistogram& h) {
    j = {{"ndivs", h.ndivs}, {"total", h.total}, {"restarts", h.restarts},
         {"counts", h.counts}};
}

void from_json(const nlohmann::json& j, SimplexHistogram& h) {
    j.at("ndivs").get_to(h.ndivs);
    j.at("total").get_to(h.total);
    j.at("restarts").get_to(h.restarts);
    j.at("counts").get_to(h.counts);
}

}  // namespace mcf
