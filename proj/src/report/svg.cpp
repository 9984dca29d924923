#include "sociominer/report/svg.hpp"

#include "sociominer/common.hpp"
#include "sociominer/traits/taxonomy.hpp"

#include <cmath>

namespace sociominer::report {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string banner_text(const Provenance& prov) {
    return "backend=" + prov.backend + " seed=" + std::to_string(prov.seed) +
           " config=" + prov.config_digest;
}

std::string svg_open(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" font-family=\"sans-serif\">\n";
}

std::string text_el(double x, double y, const std::string& content, int size,
                    const std::string& extra = "") {
    return "  <text x=\"" + format_fixed(x, 1) + "\" y=\"" + format_fixed(y, 1) +
           "\" font-size=\"" + std::to_string(size) + "\"" + extra + ">" +
           xml_escape(content) + "</text>\n";
}

// Linear grayscale: 0 -> white, 1 -> black.
std::string gray_fill(double v) {
    if (std::isnan(v)) return "#dddddd";
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    int level = 255 - static_cast<int>(std::lround(v * 255.0));
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", level, level, level);
    return std::string(buf);
}

std::string display_name(const std::string& key) {
    if (auto idx = traits::trait_index(key))
        return std::string(traits::trait_at(*idx).display_name);
    return key;
}

std::string no_data_svg(const Provenance& prov, const std::string& title) {
    std::string svg = svg_open(420, 120);
    svg += text_el(20, 40, title, 14);
    svg += text_el(20, 70, "no data", 16, " fill=\"#aa0000\"");
    svg += text_el(20, 100, banner_text(prov), 10, " fill=\"#666666\"");
    svg += "</svg>\n";
    return svg;
}

} // namespace

HeatmapData select_heatmap_rows(const analysis::ClusterTraitTable& table,
                                const analysis::EntropyRanking& ranking,
                                std::size_t n) {
    auto [lowest, highest] = analysis::top_bottom(ranking, n);
    HeatmapData data;
    data.k = table.k;
    for (const auto& [key, entropy] : lowest) data.trait_keys.push_back(key);
    for (const auto& [key, entropy] : highest) data.trait_keys.push_back(key);

    data.values.resize(static_cast<Eigen::Index>(data.trait_keys.size()), table.k);
    for (std::size_t r = 0; r < data.trait_keys.size(); ++r) {
        std::size_t t = *traits::trait_index(data.trait_keys[r]);
        data.values.row(static_cast<Eigen::Index>(r)) =
            table.values.row(static_cast<Eigen::Index>(t));
    }
    return data;
}

std::string heatmap_to_csv(const HeatmapData& data) {
    std::string out = "trait";
    for (int c = 0; c < data.k; ++c) out += ",cluster_" + std::to_string(c);
    out += '\n';
    for (std::size_t r = 0; r < data.trait_keys.size(); ++r) {
        out += data.trait_keys[r];
        for (int c = 0; c < data.k; ++c) {
            double v = data.values(static_cast<Eigen::Index>(r), c);
            out += ',';
            if (!std::isnan(v)) out += format_fixed(v);
        }
        out += '\n';
    }
    return out;
}

std::string heatmap_to_svg(const HeatmapData& data, const Provenance& prov) {
    if (data.trait_keys.empty() || data.k == 0)
        return no_data_svg(prov, "Trait heatmap");

    const int cell_w = 34, cell_h = 18;
    const int left = 170, top = 50;
    const int rows = static_cast<int>(data.trait_keys.size());
    const int legend_h = 60;
    const int width = left + data.k * cell_w + 30;
    const int height = top + rows * cell_h + legend_h + 30;

    std::string svg = svg_open(width, height);
    svg += text_el(10, 20, "Trait heatmap (lowest and highest entropy)", 13);
    for (int c = 0; c < data.k; ++c)
        svg += text_el(left + c * cell_w + 6, top - 8, "C" + std::to_string(c), 11);

    for (int r = 0; r < rows; ++r) {
        svg += text_el(8, top + r * cell_h + 13,
                       display_name(data.trait_keys[static_cast<std::size_t>(r)]), 10);
        for (int c = 0; c < data.k; ++c) {
            double v = data.values(r, c);
            svg += "  <rect x=\"" + std::to_string(left + c * cell_w) + "\" y=\"" +
                   std::to_string(top + r * cell_h) + "\" width=\"" +
                   std::to_string(cell_w) + "\" height=\"" + std::to_string(cell_h) +
                   "\" fill=\"" + gray_fill(v) + "\" stroke=\"#cccccc\"/>\n";
        }
    }

    // Legend: linear ramp from 0 to 1.
    const int ly = top + rows * cell_h + 20;
    const int swatches = 11;
    for (int i = 0; i < swatches; ++i) {
        double v = static_cast<double>(i) / (swatches - 1);
        svg += "  <rect x=\"" + std::to_string(left + i * 20) + "\" y=\"" +
               std::to_string(ly) + "\" width=\"20\" height=\"12\" fill=\"" +
               gray_fill(v) + "\" stroke=\"#cccccc\"/>\n";
    }
    svg += text_el(left - 14, ly + 11, "0", 10);
    svg += text_el(left + swatches * 20 + 4, ly + 11, "1", 10);
    svg += text_el(10, height - 10, banner_text(prov), 10, " fill=\"#666666\"");
    svg += "</svg>\n";
    return svg;
}

std::string radar_to_svg(const std::vector<std::string>& trait_keys,
                         const Eigen::VectorXd& values, int cluster,
                         const Provenance& prov) {
    const std::string title = "Personality radar, technical cluster " +
                              std::to_string(cluster);
    if (trait_keys.empty() || values.size() == 0 || values.hasNaN())
        return no_data_svg(prov, title);

    const double cx = 260, cy = 250, radius = 150;
    const int n = static_cast<int>(trait_keys.size());
    const double two_pi = 6.283185307179586;

    auto point = [&](int axis, double r) {
        double angle = two_pi * axis / n - two_pi / 4; // start at 12 o'clock
        return std::pair<double, double>{cx + r * std::cos(angle),
                                         cy + r * std::sin(angle)};
    };

    std::string svg = svg_open(520, 540);
    svg += text_el(10, 22, title, 13);

    for (double ring : {0.25, 0.5, 0.75, 1.0}) {
        std::string pts;
        for (int i = 0; i < n; ++i) {
            auto [x, y] = point(i, radius * ring);
            pts += format_fixed(x, 1) + "," + format_fixed(y, 1) + " ";
        }
        svg += "  <polygon points=\"" + pts +
               "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        auto [x, y] = point(i, radius);
        svg += "  <line x1=\"" + format_fixed(cx, 1) + "\" y1=\"" +
               format_fixed(cy, 1) + "\" x2=\"" + format_fixed(x, 1) + "\" y2=\"" +
               format_fixed(y, 1) + "\" stroke=\"#dddddd\"/>\n";
        auto [lx, ly] = point(i, radius + 14);
        std::string anchor = lx < cx - 1 ? "end" : (lx > cx + 1 ? "start" : "middle");
        svg += text_el(lx, ly + 3, display_name(trait_keys[static_cast<std::size_t>(i)]),
                       9, " text-anchor=\"" + anchor + "\"");
    }

    std::string pts;
    for (int i = 0; i < n; ++i) {
        double v = values[i];
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
        auto [x, y] = point(i, radius * v);
        pts += format_fixed(x, 1) + "," + format_fixed(y, 1) + " ";
    }
    svg += "  <polygon points=\"" + pts +
           "\" fill=\"#2c7bb6\" fill-opacity=\"0.35\" stroke=\"#2c7bb6\" "
           "stroke-width=\"1.5\"/>\n";
    svg += text_el(10, 530, banner_text(prov), 10, " fill=\"#666666\"");
    svg += "</svg>\n";
    return svg;
}

std::string radar_to_csv(const std::vector<std::string>& trait_keys,
                         const Eigen::VectorXd& values) {
    std::string out = "trait,value\n";
    for (std::size_t i = 0; i < trait_keys.size(); ++i) {
        double v = values[static_cast<Eigen::Index>(i)];
        out += trait_keys[i] + "," + (std::isnan(v) ? "" : format_fixed(v)) + "\n";
    }
    return out;
}

const std::vector<std::string>& default_radar_traits() {
    // Dimensions plus the facets, needs and values that tend to spread
    // the most across technical groups; kept in canonical order.
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> wanted = {
            "openness",        "conscientiousness", "extraversion",
            "neuroticism",     "adventurousness",   "artistic_interests",
            "imagination",     "intellect",         "liberalism",
            "achievement_striving", "cautiousness", "dutifulness",
            "self_discipline", "cheerfulness",      "gregariousness",
            "altruism",        "cooperation",       "sympathy",
            "structure",       "conservation",      "self_enhancement",
            "self_transcendence"};
        std::vector<std::string> ordered;
        for (const auto& t : traits::taxonomy())
            for (const auto& w : wanted)
                if (t.key == w) ordered.push_back(w);
        return ordered;
    }();
    return keys;
}

} // namespace sociominer::report
