#include "docalign/ocr_ingest.hpp"

#include <charconv>
#include <cstring>
#include <nlohmann/json.hpp>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::optional<int> parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
    return value;
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    char* endp = nullptr;
    const double value = std::strtod(buf.c_str(), &endp);
    if (endp != buf.c_str() + buf.size()) return std::nullopt;
    return value;
}

void check_word(const RawWord& w, int page_width, int page_height,
                std::size_t line, const std::string& where) {
    if (w.width <= 0 || w.height <= 0) {
        throw RowError(line, where + ": word box must have positive size");
    }
    if (w.left < 0 || w.top < 0) {
        throw RowError(line, where + ": word box has negative origin");
    }
    if (w.left + w.width > page_width || w.top + w.height > page_height) {
        throw RowError(line, where + ": word box extends outside the page");
    }
    if (w.confidence && (*w.confidence < 0.0f || *w.confidence > 1.0f)) {
        throw RowError(line, where + ": confidence outside [0,1]");
    }
}

}  // namespace

void validate(const Page& page) {
    if (page.page_width <= 0 || page.page_height <= 0) {
        throw FormatError("page dimensions must be positive");
    }
    std::size_t idx = 0;
    for (const RawWord& w : page.words) {
        if (trim(w.text).empty()) {
            throw RowError("word " + std::to_string(idx) + ": empty text");
        }
        check_word(w, page.page_width, page.page_height, 0,
                   "word " + std::to_string(idx));
        ++idx;
    }
}

// ---------------------------------------------------------------------------
// Tesseract TSV
// ---------------------------------------------------------------------------

Page parse_tesseract_tsv(std::string_view input, std::string source_label) {
    static constexpr const char* kColumns[12] = {
        "level", "page_num", "block_num", "par_num",  "line_num", "word_num",
        "left",  "top",      "width",     "height",   "conf",     "text"};

    Page page;
    page.source_label = std::move(source_label);

    const std::vector<std::string_view> lines = split(input, '\n');
    if (lines.empty()) throw FormatError("empty TSV input");

    {
        std::string_view header = lines[0];
        if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
        const std::vector<std::string_view> cols = split(header, '\t');
        if (cols.size() != 12) {
            throw FormatError("malformed TSV header: expected 12 columns, got " +
                              std::to_string(cols.size()));
        }
        for (int i = 0; i < 12; ++i) {
            if (trim(cols[i]) != kColumns[i]) {
                throw FormatError("malformed TSV header: column " +
                                  std::to_string(i + 1) + " is '" +
                                  std::string(cols[i]) + "', expected '" +
                                  kColumns[i] + "'");
            }
        }
    }

    bool have_page = false;
    struct PendingWord {
        RawWord word;
        std::size_t line;
    };
    std::vector<PendingWord> pending;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        const std::size_t line_no = i + 1;

        const std::vector<std::string_view> cols = split(line, '\t');
        if (cols.size() != 12) {
            throw RowError(line_no, "expected 12 tab-separated fields, got " +
                                        std::to_string(cols.size()));
        }
        const std::optional<int> level = parse_int(cols[0]);
        if (!level) {
            throw RowError(line_no, "non-integer level field '" +
                                        std::string(cols[0]) + "'");
        }

        auto geometry = [&](int col, const char* name) {
            const std::optional<int> v = parse_int(cols[col]);
            if (!v) {
                throw RowError(line_no, std::string("non-integer ") + name +
                                            " field '" + std::string(cols[col]) +
                                            "'");
            }
            return *v;
        };

        if (*level == 1 && !have_page) {
            page.page_width = geometry(8, "width");
            page.page_height = geometry(9, "height");
            have_page = true;
        } else if (*level == 5) {
            const std::string_view text = trim(cols[11]);
            if (text.empty()) continue;  // whitespace-only words are dropped
            RawWord w;
            w.text = std::string(text);
            w.left = geometry(6, "left");
            w.top = geometry(7, "top");
            w.width = geometry(8, "width");
            w.height = geometry(9, "height");
            const std::optional<double> conf = parse_double(cols[10]);
            if (!conf) {
                throw RowError(line_no, "malformed conf field '" +
                                            std::string(cols[10]) + "'");
            }
            if (*conf >= 0.0) {
                w.confidence = static_cast<float>(*conf / 100.0);
            }
            pending.push_back({std::move(w), line_no});
        }
    }

    if (!have_page) {
        throw MissingPageGeometryError("TSV input has no level-1 page row");
    }
    if (page.page_width <= 0 || page.page_height <= 0) {
        throw FormatError("level-1 row carries non-positive page dimensions");
    }
    for (PendingWord& p : pending) {
        check_word(p.word, page.page_width, page.page_height, p.line, "word");
        page.words.push_back(std::move(p.word));
    }
    return page;
}

// ---------------------------------------------------------------------------
// hOCR
// ---------------------------------------------------------------------------

namespace {

struct Tag {
    std::string_view name;
    bool closing = false;
    bool self_closing = false;
    std::string_view attrs;  // raw attribute text
    std::size_t end = 0;     // index just past '>'
};

// Scans one tag starting at input[pos] == '<'. Returns nullopt for comments,
// doctype and processing instructions (they are skipped via `end`).
std::optional<Tag> scan_tag(std::string_view input, std::size_t pos,
                            std::size_t* skip_to) {
    std::size_t i = pos + 1;
    if (i < input.size() && (input[i] == '!' || input[i] == '?')) {
        const std::size_t close = input.find('>', i);
        *skip_to = close == std::string_view::npos ? input.size() : close + 1;
        return std::nullopt;
    }
    Tag tag;
    if (i < input.size() && input[i] == '/') {
        tag.closing = true;
        ++i;
    }
    const std::size_t name_start = i;
    while (i < input.size() && !is_space(input[i]) && input[i] != '>' &&
           input[i] != '/') {
        ++i;
    }
    tag.name = input.substr(name_start, i - name_start);
    // Scan to '>' respecting quoted attribute values.
    const std::size_t attr_start = i;
    char quote = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (quote != 0) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            break;
        }
        ++i;
    }
    if (i >= input.size()) {
        *skip_to = input.size();
        return std::nullopt;  // truncated tag
    }
    tag.attrs = input.substr(attr_start, i - attr_start);
    tag.self_closing = !tag.attrs.empty() && tag.attrs.back() == '/';
    tag.end = i + 1;
    *skip_to = tag.end;
    return tag;
}

std::optional<std::string_view> attr_value(std::string_view attrs,
                                           std::string_view name) {
    std::size_t i = 0;
    while (i < attrs.size()) {
        while (i < attrs.size() && (is_space(attrs[i]) || attrs[i] == '/')) ++i;
        const std::size_t key_start = i;
        while (i < attrs.size() && attrs[i] != '=' && !is_space(attrs[i])) ++i;
        const std::string_view key = attrs.substr(key_start, key_start >= i ? 0 : i - key_start);
        while (i < attrs.size() && is_space(attrs[i])) ++i;
        if (i < attrs.size() && attrs[i] == '=') {
            ++i;
            while (i < attrs.size() && is_space(attrs[i])) ++i;
            std::string_view value;
            if (i < attrs.size() && (attrs[i] == '"' || attrs[i] == '\'')) {
                const char q = attrs[i++];
                const std::size_t v_start = i;
                while (i < attrs.size() && attrs[i] != q) ++i;
                value = attrs.substr(v_start, i - v_start);
                if (i < attrs.size()) ++i;
            } else {
                const std::size_t v_start = i;
                while (i < attrs.size() && !is_space(attrs[i])) ++i;
                value = attrs.substr(v_start, i - v_start);
            }
            if (key == name) return value;
        }
        if (key.empty()) ++i;
    }
    return std::nullopt;
}

bool class_contains(std::string_view class_attr, std::string_view cls) {
    for (std::string_view part : split(class_attr, ' ')) {
        if (trim(part) == cls) return true;
    }
    return false;
}

// Parses hOCR title properties: "bbox 10 20 110 45; x_wconf 96".
std::optional<std::vector<double>> title_prop(std::string_view title,
                                              std::string_view name) {
    for (std::string_view item : split(title, ';')) {
        item = trim(item);
        const std::size_t sp = item.find_first_of(" \t");
        const std::string_view key =
            sp == std::string_view::npos ? item : item.substr(0, sp);
        if (key != name) continue;
        std::vector<double> values;
        if (sp != std::string_view::npos) {
            for (std::string_view v : split(item.substr(sp + 1), ' ')) {
                v = trim(v);
                if (v.empty()) continue;
                const std::optional<double> d = parse_double(v);
                if (!d) return std::nullopt;
                values.push_back(*d);
            }
        }
        return values;
    }
    return std::nullopt;
}

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out.push_back(text[i++]);
            continue;
        }
        const std::size_t semi = text.find(';', i);
        if (semi == std::string_view::npos || semi - i > 8) {
            out.push_back(text[i++]);
            continue;
        }
        const std::string_view ent = text.substr(i + 1, semi - i - 1);
        if (ent == "amp") out.push_back('&');
        else if (ent == "lt") out.push_back('<');
        else if (ent == "gt") out.push_back('>');
        else if (ent == "quot") out.push_back('"');
        else if (ent == "apos") out.push_back('\'');
        else if (!ent.empty() && ent[0] == '#') {
            const std::optional<int> cp =
                ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')
                    ? [&]() -> std::optional<int> {
                          int v = 0;
                          const auto [p, ec] = std::from_chars(
                              ent.data() + 2, ent.data() + ent.size(), v, 16);
                          if (ec != std::errc() || p != ent.data() + ent.size())
                              return std::nullopt;
                          return v;
                      }()
                    : parse_int(ent.substr(1));
            if (!cp || *cp <= 0 || *cp > 0x10FFFF) {
                out.push_back(text[i++]);
                continue;
            }
            // Encode the codepoint as UTF-8.
            const unsigned c = static_cast<unsigned>(*cp);
            if (c < 0x80) {
                out.push_back(static_cast<char>(c));
            } else if (c < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (c >> 6)));
                out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
            } else if (c < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (c >> 12)));
                out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (c >> 18)));
                out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
            }
        } else {
            out.push_back(text[i++]);
            continue;
        }
        i = semi + 1;
    }
    return out;
}

}  // namespace

Page parse_hocr(std::string_view input, std::string source_label) {
    Page page;
    page.source_label = std::move(source_label);
    bool have_page = false;

    std::size_t pos = 0;
    std::size_t line_no = 1;
    std::size_t counted_to = 0;
    auto line_of = [&](std::size_t p) {
        for (; counted_to < p && counted_to < input.size(); ++counted_to) {
            if (input[counted_to] == '\n') ++line_no;
        }
        return line_no;
    };

    while (pos < input.size()) {
        const std::size_t lt = input.find('<', pos);
        if (lt == std::string_view::npos) break;
        std::size_t next = lt + 1;
        const std::optional<Tag> tag = scan_tag(input, lt, &next);
        pos = next;
        if (!tag || tag->closing) continue;

        const std::optional<std::string_view> cls = attr_value(tag->attrs, "class");
        if (!cls) continue;

        if (!have_page && class_contains(*cls, "ocr_page")) {
            const std::optional<std::string_view> title =
                attr_value(tag->attrs, "title");
            const std::optional<std::vector<double>> bbox =
                title ? title_prop(*title, "bbox") : std::nullopt;
            if (!bbox || bbox->size() != 4) {
                throw MissingPageGeometryError(
                    "ocr_page element has no usable bbox");
            }
            page.page_width = static_cast<int>((*bbox)[2] - (*bbox)[0]);
            page.page_height = static_cast<int>((*bbox)[3] - (*bbox)[1]);
            if (page.page_width <= 0 || page.page_height <= 0) {
                throw MissingPageGeometryError("ocr_page bbox is empty");
            }
            if (title) {
                const std::optional<std::vector<double>> res =
                    title_prop(*title, "scan_res");
                if (res && !res->empty() && (*res)[0] > 0) page.dpi = (*res)[0];
            }
            have_page = true;
            continue;
        }

        if (class_contains(*cls, "ocrx_word")) {
            const std::size_t word_line = line_of(lt);
            const std::optional<std::string_view> title =
                attr_value(tag->attrs, "title");
            const std::optional<std::vector<double>> bbox =
                title ? title_prop(*title, "bbox") : std::nullopt;
            if (!bbox || bbox->size() != 4) {
                throw RowError(word_line, "ocrx_word has no usable bbox");
            }
            const double x0 = (*bbox)[0], y0 = (*bbox)[1];
            const double x1 = (*bbox)[2], y1 = (*bbox)[3];
            if (x1 <= x0 || y1 <= y0) {
                throw RowError(word_line, "ocrx_word bbox is empty or inverted");
            }
            RawWord w;
            w.left = static_cast<int>(x0);
            w.top = static_cast<int>(y0);
            w.width = static_cast<int>(x1 - x0);
            w.height = static_cast<int>(y1 - y0);
            if (title) {
                const std::optional<std::vector<double>> conf =
                    title_prop(*title, "x_wconf");
                if (conf && !conf->empty()) {
                    w.confidence = static_cast<float>((*conf)[0] / 100.0);
                }
            }

            // Collect the element's text, skipping nested markup.
            std::string text;
            if (!tag->self_closing) {
                int depth = 1;
                std::size_t p = tag->end;
                while (p < input.size() && depth > 0) {
                    const std::size_t lt2 = input.find('<', p);
                    if (lt2 == std::string_view::npos) {
                        text += input.substr(p);
                        p = input.size();
                        break;
                    }
                    text += input.substr(p, lt2 - p);
                    std::size_t next2 = lt2 + 1;
                    const std::optional<Tag> inner = scan_tag(input, lt2, &next2);
                    if (inner && inner->name == tag->name) {
                        if (inner->closing) --depth;
                        else if (!inner->self_closing) ++depth;
                    }
                    p = next2;
                }
                pos = p;
            }
            std::string decoded = decode_entities(text);
            std::string compact;
            for (char c : decoded) {
                if (!is_space(c)) compact.push_back(c);
            }
            if (compact.empty()) continue;  // whitespace-only words are dropped
            w.text = std::move(compact);
            page.words.push_back(std::move(w));
        }
    }

    if (!have_page) {
        throw MissingPageGeometryError("input has no ocr_page element");
    }
    std::size_t idx = 0;
    for (const RawWord& w : page.words) {
        check_word(w, page.page_width, page.page_height, 0,
                   "ocrx_word " + std::to_string(idx));
        ++idx;
    }
    return page;
}

// ---------------------------------------------------------------------------
// Words-JSON
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_number_float()) {
        const double d = j.get<double>();
        if (d == static_cast<double>(static_cast<long long>(d))) {
            return static_cast<int>(d);
        }
    }
    throw FormatError(path + ": expected an integer");
}

}  // namespace

Page parse_words_json(std::string_view input, std::string source_label) {
    json root;
    try {
        root = json::parse(input);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw FormatError("$: expected an object");
    if (!root.contains("page") || !root["page"].is_object()) {
        throw FormatError("page: expected an object");
    }
    const json& jp = root["page"];
    if (!jp.contains("width")) throw FormatError("page.width: missing");
    if (!jp.contains("height")) throw FormatError("page.height: missing");

    Page page;
    page.source_label = std::move(source_label);
    page.page_width = require_int(jp["width"], "page.width");
    page.page_height = require_int(jp["height"], "page.height");
    if (page.page_width <= 0 || page.page_height <= 0) {
        throw RowError("page: dimensions must be positive");
    }
    if (jp.contains("dpi")) {
        if (!jp["dpi"].is_number()) throw FormatError("page.dpi: expected a number");
        page.dpi = jp["dpi"].get<double>();
    }

    if (!root.contains("words") || !root["words"].is_array()) {
        throw FormatError("words: expected an array");
    }
    std::size_t idx = 0;
    for (const json& jw : root["words"]) {
        const std::string path = "words[" + std::to_string(idx) + "]";
        if (!jw.is_object()) throw FormatError(path + ": expected an object");
        if (!jw.contains("text") || !jw["text"].is_string()) {
            throw FormatError(path + ".text: expected a string");
        }
        RawWord w;
        w.text = std::string(trim(jw["text"].get<std::string>()));
        for (const char* field : {"left", "top", "width", "height"}) {
            if (!jw.contains(field)) {
                throw FormatError(path + "." + field + ": missing");
            }
        }
        w.left = require_int(jw["left"], path + ".left");
        w.top = require_int(jw["top"], path + ".top");
        w.width = require_int(jw["width"], path + ".width");
        w.height = require_int(jw["height"], path + ".height");
        if (jw.contains("confidence")) {
            if (!jw["confidence"].is_number()) {
                throw FormatError(path + ".confidence: expected a number");
            }
            w.confidence = jw["confidence"].get<float>();
        }
        if (w.text.empty()) {
            ++idx;
            continue;  // whitespace-only words are dropped
        }
        try {
            check_word(w, page.page_width, page.page_height, 0, path);
        } catch (const RowError& e) {
            throw RowError(std::string(e.what()));
        }
        page.words.push_back(std::move(w));
        ++idx;
    }
    return page;
}

// ---------------------------------------------------------------------------
// Feature file
// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'D', 'A', 'F', '1'};

void put_u16(std::vector<std::uint8_t>* out, std::uint16_t v) {
    out->push_back(static_cast<std::uint8_t>(v & 0xFF));
    out->push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>* out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out->push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void put_f32(std::vector<std::uint8_t>* out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    put_u32(out, bits);
}

class Reader {
  public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t u8() { return take(1)[0]; }
    std::uint16_t u16() {
        const auto b = take(2);
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    }
    std::uint32_t u32() {
        const auto b = take(4);
        return static_cast<std::uint32_t>(b[0]) |
               (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) |
               (static_cast<std::uint32_t>(b[3]) << 24);
    }
    float f32() {
        const std::uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }
    std::string bytes(std::size_t n) {
        const auto b = take(n);
        return std::string(reinterpret_cast<const char*>(b.data()), b.size());
    }
    bool exhausted() const { return pos_ == bytes_.size(); }

  private:
    std::span<const std::uint8_t> take(std::size_t n) {
        if (pos_ + n > bytes_.size()) {
            throw FormatError("truncated feature file");
        }
        const auto s = bytes_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> write_feature_file(const Page& page) {
    validate(page);
    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u32(&out, static_cast<std::uint32_t>(page.page_width));
    put_u32(&out, static_cast<std::uint32_t>(page.page_height));
    put_u32(&out, static_cast<std::uint32_t>(page.words.size()));
    for (const RawWord& w : page.words) {
        put_u32(&out, static_cast<std::uint32_t>(w.left));
        put_u32(&out, static_cast<std::uint32_t>(w.top));
        put_u32(&out, static_cast<std::uint32_t>(w.width));
        put_u32(&out, static_cast<std::uint32_t>(w.height));
        out.push_back(w.confidence ? 1 : 0);
        if (w.confidence) put_f32(&out, *w.confidence);
        if (w.text.size() > 0xFFFF) {
            throw FormatError("word text exceeds 65535 bytes");
        }
        put_u16(&out, static_cast<std::uint16_t>(w.text.size()));
        out.insert(out.end(), w.text.begin(), w.text.end());
    }
    return out;
}

Page read_feature_file(std::span<const std::uint8_t> bytes,
                       std::string source_label) {
    Reader r(bytes);
    if (r.bytes(4) != std::string(kMagic, 4)) {
        throw FormatError("bad feature-file magic, expected DAF1");
    }
    Page page;
    page.source_label = std::move(source_label);
    page.page_width = static_cast<int>(r.u32());
    page.page_height = static_cast<int>(r.u32());
    const std::uint32_t count = r.u32();
    page.words.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        RawWord w;
        w.left = static_cast<int>(r.u32());
        w.top = static_cast<int>(r.u32());
        w.width = static_cast<int>(r.u32());
        w.height = static_cast<int>(r.u32());
        const std::uint8_t flag = r.u8();
        if (flag > 1) throw FormatError("bad confidence flag");
        if (flag == 1) w.confidence = r.f32();
        const std::uint16_t len = r.u16();
        w.text = r.bytes(len);
        page.words.push_back(std::move(w));
    }
    if (!r.exhausted()) {
        throw FormatError("trailing bytes after feature-file payload");
    }
    try {
        validate(page);
    } catch (const Error& e) {
        throw FormatError(std::string("invalid feature-file content: ") +
                          e.what());
    }
    return page;
}

std::size_t feature_payload_size(const Page& page) {
    return write_feature_file(page).size();
}

}  // namespace docalign
