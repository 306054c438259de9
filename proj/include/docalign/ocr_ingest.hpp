#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace docalign {

// One OCR-detected word as emitted by the engine. Geometry is in pixels,
// page coordinate frame, origin top-left, y down.
struct RawWord {
    std::string text;
    int left = 0;
    int top = 0;
    int width = 0;
    int height = 0;
    // Fraction in [0,1]; stored as float to match the feature-file encoding.
    std::optional<float> confidence;

    friend bool operator==(const RawWord&, const RawWord&) = default;
};

// All words of one document page plus page dimensions.
struct Page {
    std::vector<RawWord> words;
    int page_width = 0;
    int page_height = 0;
    std::optional<double> dpi;
    std::string source_label;

    friend bool operator==(const Page&, const Page&) = default;
};

// Throws FormatError/RowError if the page violates its invariants
// (positive dimensions, every word box positive-sized and inside the page,
// non-empty word text).
void validate(const Page& page);

// Tesseract TSV: header row, then columns
// level page_num block_num par_num line_num word_num left top width height conf text.
// Keeps level-5 rows with non-whitespace text; page dimensions come from the
// first level-1 row; conf >= 0 becomes confidence = conf/100, conf = -1 means
// absent.
Page parse_tesseract_tsv(std::string_view input, std::string source_label = "");

// hOCR subset: ocr_page carries the page bbox, ocrx_word elements carry
// `bbox x0 y0 x1 y1` and optionally `x_wconf NN` in their title attribute.
Page parse_hocr(std::string_view input, std::string source_label = "");

// Vendor-neutral JSON: {page: {width, height, dpi?},
//                       words: [{text, left, top, width, height, confidence?}]}.
Page parse_words_json(std::string_view input, std::string source_label = "");

// Compact binary feature file. Layout: magic "DAF1", page_width/page_height
// u32le, word count u32le, then per word: left/top/width/height u32le,
// confidence-present byte, optional f32le confidence, text byte length u16le,
// UTF-8 text bytes. Writes are deterministic: equal pages produce identical
// bytes. dpi and source_label are transport metadata and are not persisted.
std::vector<std::uint8_t> write_feature_file(const Page& page);
Page read_feature_file(std::span<const std::uint8_t> bytes,
                       std::string source_label = "");

// Length of write_feature_file(page).
std::size_t feature_payload_size(const Page& page);

}  // namespace docalign
