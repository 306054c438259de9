#include "docalign/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_set>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

Point2 frame_point(const WordFeature& f, const FeatureSet& doc,
                   CoordinateFrame frame) {
    if (frame == CoordinateFrame::kPixels) return f.centroid;
    return {f.centroid.x / doc.page_width, f.centroid.y / doc.page_height};
}

}  // namespace

std::vector<Correspondence> match_features(const FeatureSet& a,
                                           const FeatureSet& b,
                                           const MatchConfig& config) {
    // std::map keeps token iteration order deterministic.
    std::map<std::string, std::pair<std::vector<std::size_t>,
                                    std::vector<std::size_t>>> groups;
    for (std::size_t i = 0; i < a.features.size(); ++i) {
        groups[a.features[i].token].first.push_back(i);
    }
    for (std::size_t j = 0; j < b.features.size(); ++j) {
        groups[b.features[j].token].second.push_back(j);
    }

    std::vector<Correspondence> out;
    for (const auto& [token, group] : groups) {
        const std::vector<std::size_t>& ia = group.first;
        const std::vector<std::size_t>& ib = group.second;
        if (ia.empty() || ib.empty()) continue;

        const int degree = static_cast<int>(ia.size() * ib.size());
        if (degree == 1) {
            out.push_back({a.features[ia[0]].centroid,
                           b.features[ib[0]].centroid, token, 1});
            continue;
        }
        if (config.ambiguity_policy == AmbiguityPolicy::kDropAmbiguous) continue;

        // Greedy nearest-pair assignment; ties broken by coordinates so the
        // result is independent of input order.
        struct Pair {
            double dist;
            Point2 src, dst;
            std::size_t sa, sb;
        };
        std::vector<Pair> pairs;
        pairs.reserve(ia.size() * ib.size());
        for (std::size_t sa = 0; sa < ia.size(); ++sa) {
            const WordFeature& fa = a.features[ia[sa]];
            const Point2 pa = frame_point(fa, a, config.coordinate_frame);
            for (std::size_t sb = 0; sb < ib.size(); ++sb) {
                const WordFeature& fb = b.features[ib[sb]];
                const Point2 pb = frame_point(fb, b, config.coordinate_frame);
                const double dist = std::hypot(pa.x - pb.x, pa.y - pb.y);
                pairs.push_back({dist, fa.centroid, fb.centroid, sa, sb});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
            return std::tie(x.dist, x.src.x, x.src.y, x.dst.x, x.dst.y) <
                   std::tie(y.dist, y.src.x, y.src.y, y.dst.x, y.dst.y);
        });
        std::vector<bool> used_a(ia.size(), false), used_b(ib.size(), false);
        std::size_t remaining = std::min(ia.size(), ib.size());
        for (const Pair& p : pairs) {
            if (remaining == 0) break;
            if (used_a[p.sa] || used_b[p.sb]) continue;
            used_a[p.sa] = true;
            used_b[p.sb] = true;
            --remaining;
            out.push_back({p.src, p.dst, token, degree});
        }
    }

    std::sort(out.begin(), out.end(), [](const Correspondence& x,
                                         const Correspondence& y) {
        return std::tie(x.token, x.src.x, x.src.y) <
               std::tie(y.token, y.src.x, y.src.y);
    });
    return out;
}

MatchStats match_statistics(const std::vector<Correspondence>& matches) {
    MatchStats s;
    std::unordered_set<std::string> tokens;
    for (const Correspondence& m : matches) {
        ++s.total;
        if (m.ambiguity_degree > 1) ++s.ambiguous;
        else ++s.unambiguous;
        tokens.insert(m.token);
    }
    s.distinct_tokens = tokens.size();
    s.fraction_ambiguous =
        s.total == 0 ? 0.0
                     : static_cast<double>(s.ambiguous) /
                           static_cast<double>(s.total);
    return s;
}

std::string write_match_lines(const std::vector<Correspondence>& matches) {
    std::string out;
    char buf[360];
    for (const Correspondence& m : matches) {
        std::snprintf(buf, sizeof buf, "%s\t%.17g\t%.17g\t%.17g\t%.17g\t%d\n",
                      m.token.c_str(), m.src.x, m.src.y, m.dst.x, m.dst.y,
                      m.ambiguity_degree);
        out += buf;
    }
    return out;
}

std::vector<Correspondence> read_match_lines(std::string_view input) {
    std::vector<Correspondence> out;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < input.size()) {
        std::size_t end = input.find('\n', start);
        if (end == std::string_view::npos) end = input.size();
        std::string_view line = input.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;

        Correspondence c;
        std::vector<std::string_view> fields;
        std::size_t fs = 0;
        while (true) {
            const std::size_t tab = line.find('\t', fs);
            if (tab == std::string_view::npos) {
                fields.push_back(line.substr(fs));
                break;
            }
            fields.push_back(line.substr(fs, tab - fs));
            fs = tab + 1;
        }
        if (fields.size() != 6) {
            throw RowError(line_no, "expected 6 tab-separated match fields");
        }
        c.token = std::string(fields[0]);
        double* coords[4] = {&c.src.x, &c.src.y, &c.dst.x, &c.dst.y};
        for (int i = 0; i < 4; ++i) {
            const std::string field(fields[i + 1]);
            char* endp = nullptr;
            *coords[i] = std::strtod(field.c_str(), &endp);
            if (endp != field.c_str() + field.size() || field.empty()) {
                throw RowError(line_no, "malformed coordinate '" + field + "'");
            }
        }
        const std::string amb(fields[5]);
        char* endp = nullptr;
        c.ambiguity_degree = static_cast<int>(std::strtol(amb.c_str(), &endp, 10));
        if (endp != amb.c_str() + amb.size() || amb.empty() ||
            c.ambiguity_degree < 1) {
            throw RowError(line_no, "malformed ambiguity degree '" + amb + "'");
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace docalign
