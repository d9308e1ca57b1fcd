#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mcf/dynamics.hpp"

namespace mcf {

// ---- CSV ----

// RFC-4180-style: header first, LF line endings, fields quoted only when
// needed.  Throws DomainError on ragged rows.
std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

std::string csv_double(double v);  // 17 significant digits, round-trips

// ---- SVG ----

struct Scene {
    struct Polygon {
        std::vector<std::pair<double, double>> points;  // unit-square coords
        std::string fill = "none";
        std::string stroke = "#000000";
    };
    struct Dot {
        double x = 0, y = 0, radius = 0.002;
        std::string fill = "#000000";
    };
    struct Label {
        double x = 0, y = 0;
        std::string text;
        std::string fill = "#000000";
    };
    using Element = std::variant<Polygon, Dot, Label>;

    int width = 640;
    int height = 640;
    std::vector<Element> elements;
};

// Standalone SVG 1.1 document; deterministic bytes for identical scenes.
// The unit square maps to the viewport with y pointing up.
std::string write_svg(const Scene& scene);

// ---- tables ----

std::string format_significant(double v, int digits = 5);

// Single-algorithm table: quantity rows with min/mean/max/std columns.
std::string write_table_text(const LyapunovTable& t);

// Comparison layout: Algorithm  #Orbits  theta1 (std)  theta2 (std)
// 1-theta2/theta1 (std); one row per algorithm.
std::string write_comparison_text(const std::vector<LyapunovTable>& tables);

// ---- JSON ----

void to_json(nlohmann::json& j, const Stats& s);
void from_json(const nlohmann::json& j, Stats& s);
void to_json(nlohmann::json& j, const LyapunovEstimate& e);
void from_json(const nlohmann::json& j, LyapunovEstimate& e);
void to_json(nlohmann::json& j, const LyapunovTable& t);
void from_json(const nlohmann::json& j, LyapunovTable& t);
void to_json(nlohmann::json& j, const SimplexHistogram& h);
void from_json(const nlohmann::json& j, SimplexHistogram& h);

}  // namespace mcf
