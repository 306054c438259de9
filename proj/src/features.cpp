#include "docalign/features.hpp"

#include <fstream>
#include <unordered_map>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

// --- minimal UTF-8 handling ------------------------------------------------

// Decodes one codepoint starting at s[i]; advances i. Invalid sequences decode
// as U+FFFD one byte at a time, which keeps the function total.
char32_t decode_utf8(std::string_view s, std::size_t* i) {
    const unsigned char c0 = static_cast<unsigned char>(s[*i]);
    std::size_t len = 1;
    char32_t cp = 0xFFFD;
    if (c0 < 0x80) {
        cp = c0;
    } else if ((c0 & 0xE0) == 0xC0) {
        len = 2;
        cp = c0 & 0x1F;
    } else if ((c0 & 0xF0) == 0xE0) {
        len = 3;
        cp = c0 & 0x0F;
    } else if ((c0 & 0xF8) == 0xF0) {
        len = 4;
        cp = c0 & 0x07;
    } else {
        ++*i;
        return 0xFFFD;
    }
    if (*i + len > s.size()) {
        ++*i;
        return 0xFFFD;
    }
    for (std::size_t k = 1; k < len; ++k) {
        const unsigned char ck = static_cast<unsigned char>(s[*i + k]);
        if ((ck & 0xC0) != 0x80) {
            ++*i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (ck & 0x3F);
    }
    *i += len;
    return cp;
}

void encode_utf8(char32_t cp, std::string* out) {
    if (cp < 0x80) {
        out->push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// --- casefolding -------------------------------------------------------------
//
// Covers ASCII, Latin-1, Latin Extended-A, basic Greek and basic Cyrillic.
// Codepoints outside these ranges pass through unchanged; matching only needs
// the fold to be deterministic and applied identically to both documents.

void fold_codepoint(char32_t cp, std::u32string* out) {
    if (cp >= U'A' && cp <= U'Z') {
        out->push_back(cp + 0x20);
        return;
    }
    if (cp == 0x00DF) {  // LATIN SMALL LETTER SHARP S -> "ss"
        out->push_back(U's');
        out->push_back(U's');
        return;
    }
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) {  // Latin-1 capitals
        out->push_back(cp + 0x20);
        return;
    }
    if (cp >= 0x0100 && cp <= 0x017F) {  // Latin Extended-A
        if (cp == 0x0130) {               // I WITH DOT ABOVE
            out->push_back(U'i');
            return;
        }
        if (cp == 0x0131) {  // dotless i has no uppercase fold here
            out->push_back(cp);
            return;
        }
        if (cp == 0x0178) {  // Y WITH DIAERESIS
            out->push_back(0x00FF);
            return;
        }
        if (cp == 0x017F) {  // LONG S
            out->push_back(U's');
            return;
        }
        if (cp <= 0x0137 || (cp >= 0x014A && cp <= 0x0177)) {
            out->push_back((cp % 2 == 0) ? cp + 1 : cp);
            return;
        }
        // 0x0139..0x0148 and 0x0179..0x017E pair odd -> even.
        out->push_back((cp % 2 == 1) ? cp + 1 : cp);
        return;
    }
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) {  // Greek capitals
        out->push_back(cp + 0x20);
        return;
    }
    if (cp >= 0x0410 && cp <= 0x042F) {  // Cyrillic capitals
        out->push_back(cp + 0x20);
        return;
    }
    if (cp >= 0x0400 && cp <= 0x040F) {
        out->push_back(cp + 0x50);
        return;
    }
    out->push_back(cp);
}

bool is_whitespace_cp(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
           cp == U'\f' || cp == U'\v' || cp == 0x00A0 ||
           (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 ||
           cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

// Punctuation and symbol codepoints (Unicode P* and S* for the script ranges
// the fold covers).
bool is_punct_or_symbol_cp(char32_t cp) {
    if (cp < 0x80) {
        const bool alnum = (cp >= U'0' && cp <= U'9') ||
                           (cp >= U'a' && cp <= U'z') ||
                           (cp >= U'A' && cp <= U'Z');
        return !alnum && cp > 0x20 && cp < 0x7F;
    }
    if (cp >= 0x00A1 && cp <= 0x00BF) return true;  // Latin-1 punct/symbols
    if (cp == 0x00D7 || cp == 0x00F7) return true;
    if (cp >= 0x2010 && cp <= 0x205E) return true;  // general punctuation
    if (cp >= 0x20A0 && cp <= 0x20CF) return true;  // currency
    if (cp >= 0x2100 && cp <= 0x2BFF) return true;  // letterlike..misc symbols
    if (cp >= 0x3001 && cp <= 0x303F) return true;  // CJK punctuation
    if (cp == 0xFFFD) return true;
    return false;
}

}  // namespace

std::string normalize_token(std::string_view raw) {
    std::u32string folded;
    folded.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        const char32_t cp = decode_utf8(raw, &i);
        if (is_whitespace_cp(cp)) continue;
        fold_codepoint(cp, &folded);
    }
    std::size_t begin = 0;
    std::size_t end = folded.size();
    while (begin < end && is_punct_or_symbol_cp(folded[begin])) ++begin;
    while (end > begin && is_punct_or_symbol_cp(folded[end - 1])) --end;
    std::string out;
    for (std::size_t k = begin; k < end; ++k) {
        encode_utf8(folded[k], &out);
    }
    return out;
}

// ---------------------------------------------------------------------------

const char* const* embedded_stopwords(std::size_t* count);  // stopwords.cpp

const StopwordList& StopwordList::default_english() {
    static const StopwordList list = [] {
        std::size_t count = 0;
        const char* const* words = embedded_stopwords(&count);
        StopwordList l;
        for (std::size_t i = 0; i < count; ++i) {
            l.tokens_.insert(words[i]);
        }
        return l;
    }();
    return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open stopword file: " + path.string());
    }
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::size_t b = 0, e = line.size();
        while (b < e && (line[b] == ' ' || line[b] == '\t' || line[b] == '\r')) ++b;
        while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t' || line[e - 1] == '\r')) --e;
        if (e > b) list.tokens_.insert(line.substr(b, e - b));
    }
    return list;
}

StopwordList StopwordList::from_tokens(std::vector<std::string> tokens) {
    StopwordList list;
    for (std::string& t : tokens) list.tokens_.insert(std::move(t));
    return list;
}

StopwordList StopwordList::empty() { return StopwordList(); }

bool StopwordList::contains(std::string_view token) const {
    return tokens_.contains(std::string(token));
}

// ---------------------------------------------------------------------------

namespace {

struct CandidateWord {
    std::string token;
    std::string raw_text;
    BoxF box;
    std::optional<float> confidence;
};

FeatureSet extract_impl(std::vector<CandidateWord> words, double page_width,
                        double page_height, std::string source_label,
                        const StopwordList& stopwords,
                        const ExtractConfig& config, std::size_t word_count) {
    std::unordered_map<std::string, std::size_t> token_counts;
    if (config.frequency_filter) {
        for (const CandidateWord& w : words) {
            if (!w.token.empty()) ++token_counts[w.token];
        }
    }
    const double cap_d = std::max(
        static_cast<double>(config.frequency_min_count),
        config.frequency_fraction * static_cast<double>(word_count));

    FeatureSet out;
    out.page_width = page_width;
    out.page_height = page_height;
    out.source_label = std::move(source_label);
    for (CandidateWord& w : words) {
        if (w.token.empty()) continue;
        if (stopwords.contains(w.token)) continue;
        if (config.frequency_filter &&
            static_cast<double>(token_counts[w.token]) > cap_d) {
            continue;  // document-specific stopword
        }
        WordFeature f;
        f.token = std::move(w.token);
        f.raw_text = std::move(w.raw_text);
        f.bbox = w.box;
        f.centroid = {w.box.left + w.box.width / 2.0,
                      w.box.top + w.box.height / 2.0};
        f.confidence = w.confidence;
        out.features.push_back(std::move(f));
    }
    return out;
}

}  // namespace

FeatureSet extract_features(const Page& page, const StopwordList& stopwords,
                            const ExtractConfig& config) {
    std::vector<CandidateWord> words;
    words.reserve(page.words.size());
    for (const RawWord& w : page.words) {
        CandidateWord c;
        c.token = normalize_token(w.text);
        c.raw_text = w.text;
        c.box = {static_cast<double>(w.left), static_cast<double>(w.top),
                 static_cast<double>(w.width), static_cast<double>(w.height)};
        c.confidence = w.confidence;
        words.push_back(std::move(c));
    }
    return extract_impl(std::move(words), page.page_width, page.page_height,
                        page.source_label, stopwords, config,
                        page.words.size());
}

FeatureSet extract_features(const std::vector<SubpixelWord>& words,
                            double page_width, double page_height,
                            std::string source_label,
                            const StopwordList& stopwords,
                            const ExtractConfig& config) {
    std::vector<CandidateWord> candidates;
    candidates.reserve(words.size());
    for (const SubpixelWord& w : words) {
        CandidateWord c;
        c.token = normalize_token(w.text);
        c.raw_text = w.text;
        c.box = w.box;
        c.confidence = w.confidence;
        candidates.push_back(std::move(c));
    }
    return extract_impl(std::move(candidates), page_width, page_height,
                        std::move(source_label), stopwords, config,
                        words.size());
}

}  // namespace docalign
