#include "docalign/serialization.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

using nlohmann::json;

json parse_or_throw(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

json matrix_to_json(const Eigen::Matrix3d& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::Matrix3d matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) {
        throw FormatError(path + ": expected a 3x3 array");
    }
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != 3) {
            throw FormatError(path + ": expected a 3x3 array");
        }
        for (int c = 0; c < 3; ++c) {
            if (!row[c].is_number()) {
                throw FormatError(path + ": matrix entries must be numbers");
            }
            m(r, c) = row[c].get<double>();
        }
    }
    return m;
}

}  // namespace

std::string homography_to_json(const Homography& h) {
    json j;
    j["h"] = matrix_to_json(h.matrix());
    return j.dump();
}

Homography homography_from_json(std::string_view text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("h")) {
        throw FormatError("h: missing homography matrix");
    }
    return Homography::from_matrix(matrix_from_json(j["h"], "h"));
}

std::string estimation_result_to_json(const EstimationResult& r) {
    json j;
    j["homography"]["h"] = matrix_to_json(r.homography.matrix());
    j["inliers"] = r.inliers;
    j["iterations_run"] = r.iterations_run;
    if (std::isfinite(r.mean_sqrt_ste)) {
        j["mean_sqrt_ste"] = r.mean_sqrt_ste;
    } else {
        j["mean_sqrt_ste"] = nullptr;
    }
    j["converged"] = r.converged;
    return j.dump();
}

EstimationResult estimation_result_from_json(std::string_view text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("homography") ||
        !j["homography"].is_object() || !j["homography"].contains("h")) {
        throw FormatError("homography.h: missing");
    }
    EstimationResult r;
    r.homography = Homography::from_matrix(
        matrix_from_json(j["homography"]["h"], "homography.h"));
    if (j.contains("inliers")) {
        if (!j["inliers"].is_array()) {
            throw FormatError("inliers: expected an array");
        }
        for (const json& v : j["inliers"]) {
            if (!v.is_number_unsigned() && !v.is_number_integer()) {
                throw FormatError("inliers: indices must be integers");
            }
            r.inliers.push_back(v.get<std::size_t>());
        }
    }
    if (j.contains("iterations_run")) {
        r.iterations_run = j["iterations_run"].get<std::int64_t>();
    }
    if (j.contains("mean_sqrt_ste") && j["mean_sqrt_ste"].is_number()) {
        r.mean_sqrt_ste = j["mean_sqrt_ste"].get<double>();
    }
    if (j.contains("converged")) {
        r.converged = j["converged"].get<bool>();
    }
    return r;
}

std::string ground_truth_to_json(const GroundTruthFile& gt) {
    json j;
    j["h_true"]["h"] = matrix_to_json(gt.h_true.matrix());
    j["page_width"] = gt.page_width;
    j["page_height"] = gt.page_height;
    json pairs = json::array();
    for (const auto& [a, b] : gt.true_correspondences) {
        pairs.push_back(json::array({a, b}));
    }
    j["true_correspondences"] = std::move(pairs);
    return j.dump();
}

GroundTruthFile ground_truth_from_json(std::string_view text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("h_true") || !j["h_true"].is_object() ||
        !j["h_true"].contains("h")) {
        throw FormatError("h_true.h: missing");
    }
    GroundTruthFile gt;
    gt.h_true =
        Homography::from_matrix(matrix_from_json(j["h_true"]["h"], "h_true.h"));
    if (!j.contains("page_width") || !j.contains("page_height") ||
        !j["page_width"].is_number() || !j["page_height"].is_number()) {
        throw FormatError("page_width/page_height: missing or non-numeric");
    }
    gt.page_width = j["page_width"].get<double>();
    gt.page_height = j["page_height"].get<double>();
    if (j.contains("true_correspondences")) {
        if (!j["true_correspondences"].is_array()) {
            throw FormatError("true_correspondences: expected an array");
        }
        for (const json& p : j["true_correspondences"]) {
            if (!p.is_array() || p.size() != 2) {
                throw FormatError(
                    "true_correspondences: expected [a, b] index pairs");
            }
            gt.true_correspondences.emplace_back(p[0].get<std::size_t>(),
                                                 p[1].get<std::size_t>());
        }
    }
    return gt;
}

std::string page_to_words_json(const Page& page) {
    json j;
    j["page"]["width"] = page.page_width;
    j["page"]["height"] = page.page_height;
    if (page.dpi) j["page"]["dpi"] = *page.dpi;
    json words = json::array();
    for (const RawWord& w : page.words) {
        json jw;
        jw["text"] = w.text;
        jw["left"] = w.left;
        jw["top"] = w.top;
        jw["width"] = w.width;
        jw["height"] = w.height;
        if (w.confidence) jw["confidence"] = *w.confidence;
        words.push_back(std::move(jw));
    }
    j["words"] = std::move(words);
    return j.dump();
}

}  // namespace docalign
