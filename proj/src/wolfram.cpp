#include "ecainfo/wolfram.hpp"

#include <sstream>
#include <stdexcept>

namespace ecainfo {

const char* wolfram_class_name(WolframClass c) {
    switch (c) {
    case WolframClass::I: return "I";
    case WolframClass::II: return "II";
    case WolframClass::III: return "III";
    case WolframClass::IV: return "IV";
    }
    return "?";
}

const char* info_class_name(InfoClass c) {
    switch (c) {
    case InfoClass::I1: return "I1";
    case InfoClass::I2: return "I2";
    case InfoClass::I3: return "I3";
    }
    return "?";
}

std::optional<WolframClass> parse_wolfram_class(std::string_view s) {
    if (s == "I") return WolframClass::I;
    if (s == "II") return WolframClass::II;
    if (s == "III") return WolframClass::III;
    if (s == "IV") return WolframClass::IV;
    return std::nullopt;
}

std::optional<InfoClass> parse_info_class(std::string_view s) {
    if (s == "I1") return InfoClass::I1;
    if (s == "I2") return InfoClass::I2;
    if (s == "I3") return InfoClass::I3;
    return std::nullopt;
}

namespace {

// Wolfram classes for the 88 representatives. Chaotic (III) and complex (IV)
// labels follow the usual assignment; the I/II split follows the standard
// tables but only the III/IV-vs-rest distinction feeds the TE threshold.
constexpr std::uint8_t kClassI[] = {0, 8, 32, 40, 128, 136, 160, 168};
constexpr std::uint8_t kClassIII[] = {18, 22, 30, 45, 60, 90, 105, 122, 126, 146, 150};
constexpr std::uint8_t kClassIV[] = {41, 54, 106, 110};

// Reference information classes for the 88 representatives.
constexpr std::uint8_t kRefI1[] = {0,   1,   3,   4,   5,   8,   9,   12,  13,  18,  19,
                                   23,  25,  26,  28,  29,  32,  33,  35,  36,  37,  40,
                                   41,  44,  50,  51,  57,  58,  62,  72,  73,  76,  77,
                                   78,  94,  104, 108, 128, 130, 132, 134, 136, 140, 146,
                                   152, 154, 156, 160, 162, 164, 178, 200, 204, 232};
constexpr std::uint8_t kRefI2[] = {2,  6,   7,   10,  11,  14,  15,  24, 27, 34, 38, 42,
                                   43, 46,  54,  56,  74,  106, 138, 142, 168, 170, 172, 184};
constexpr std::uint8_t kRefI3[] = {22, 30, 45, 60, 90, 105, 110, 122, 126, 150};

template <typename T>
void for_each_line_pair(std::string_view text, T&& fn) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int rule = -1;
        std::string cls;
        if (!(ls >> rule >> cls)) continue;
        if (rule < 0 || rule > 255) throw std::invalid_argument("rule out of range in label table");
        fn(static_cast<std::uint8_t>(rule), cls);
    }
}

} // namespace

const WolframLabels& WolframLabels::bundled() {
    static const WolframLabels labels = [] {
        WolframLabels out;
        for (const Rule rep : representatives()) out.labels_[rep.code] = WolframClass::II;
        for (std::uint8_t r : kClassI) out.labels_[r] = WolframClass::I;
        for (std::uint8_t r : kClassIII) out.labels_[r] = WolframClass::III;
        for (std::uint8_t r : kClassIV) out.labels_[r] = WolframClass::IV;
        return out;
    }();
    return labels;
}

WolframLabels WolframLabels::parse(std::string_view text) {
    WolframLabels out;
    for_each_line_pair(text, [&](std::uint8_t rule, const std::string& cls) {
        const auto parsed = parse_wolfram_class(cls);
        if (!parsed) throw std::invalid_argument("unknown Wolfram class: " + cls);
        out.labels_[rule] = *parsed;
    });
    return out;
}

WolframClass WolframLabels::at(Rule rule) const {
    const auto it = labels_.find(representative(rule).code);
    if (it == labels_.end())
        throw std::out_of_range("no Wolfram label for rule " + std::to_string(rule.code));
    return it->second;
}

const ReferenceClassification& ReferenceClassification::bundled() {
    static const ReferenceClassification ref = [] {
        ReferenceClassification out;
        for (std::uint8_t r : kRefI1) out.classes_[r] = InfoClass::I1;
        for (std::uint8_t r : kRefI2) out.classes_[r] = InfoClass::I2;
        for (std::uint8_t r : kRefI3) out.classes_[r] = InfoClass::I3;
        return out;
    }();
    return ref;
}

ReferenceClassification ReferenceClassification::parse(std::string_view text) {
    ReferenceClassification out;
    for_each_line_pair(text, [&](std::uint8_t rule, const std::string& cls) {
        const auto parsed = parse_info_class(cls);
        if (!parsed) throw std::invalid_argument("unknown information class: " + cls);
        out.classes_[rule] = *parsed;
    });
    return out;
}

InfoClass ReferenceClassification::at(Rule rule) const {
    const auto it = classes_.find(representative(rule).code);
    if (it == classes_.end())
        throw std::out_of_range("no reference class for rule " + std::to_string(rule.code));
    return it->second;
}

} // namespace ecainfo
