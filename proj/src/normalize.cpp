#include "pathoverlap/normalize.hpp"

#include <cctype>

namespace pathoverlap {

NormalizationConfig NormalizationConfig::defaults() {
    return NormalizationConfig{
        {"phosphorylated", "activated", "active", "inactive", "total", "human",
         "recombinant", "p-", "phospho-"},
        true,
        true,
    };
}

namespace {

std::string fold(const std::string& s, const NormalizationConfig& cfg) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (unsigned char c : s) {
        if (cfg.collapse_whitespace && std::isspace(c)) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) {
            out.push_back(' ');
        }
        in_space = false;
        out.push_back(cfg.case_fold ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
    }
    return out;
}

// A word token must end at a space or hyphen; a token ending in '-' is a
// raw prefix ("p-Akt"). Returns chars consumed, 0 if no match.
std::size_t match_prefix(const std::string& s, const std::string& token) {
    if (token.empty() || s.size() < token.size() || s.compare(0, token.size(), token) != 0) {
        return 0;
    }
    std::size_t n = token.size();
    if (token.back() != '-') {
        if (n < s.size() && s[n] != ' ' && s[n] != '-') {
            return 0;
        }
        if (n < s.size() && s[n] == '-') {
            ++n;
        }
    }
    while (n < s.size() && s[n] == ' ') {
        ++n;
    }
    return n;
}

} // namespace

std::string normalize_name(const std::string& name, const NormalizationConfig& cfg) {
    std::string folded = fold(name, cfg);
    std::string cur = folded;
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (const std::string& raw : cfg.strip_prefixes) {
            std::string token = fold(raw, cfg);
            if (std::size_t n = match_prefix(cur, token)) {
                cur.erase(0, n);
                stripped = true;
                break;
            }
        }
    }
    if (cur.empty() && !folded.empty()) {
        return folded;
    }
    return cur;
}

} // namespace pathoverlap
