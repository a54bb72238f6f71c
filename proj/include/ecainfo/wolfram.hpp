#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ecainfo/rules.hpp"

namespace ecainfo {

/// Wolfram's qualitative taxonomy, bundled as a label asset.
enum class WolframClass : int { I = 1, II = 2, III = 3, IV = 4 };

/// This project's information classes, ordered I1 < I2 < I3.
enum class InfoClass : int { I1 = 1, I2 = 2, I3 = 3 };

const char* wolfram_class_name(WolframClass c);
const char* info_class_name(InfoClass c);
std::optional<WolframClass> parse_wolfram_class(std::string_view s);
std::optional<InfoClass> parse_info_class(std::string_view s);

/// rule -> class lookup keyed by the 88 equivalence representatives.
class WolframLabels {
  public:
    /// The compiled-in copy of data/wolfram_classes.txt.
    static const WolframLabels& bundled();

    /// Parse the text-table form: one "rule class" pair per line, '#' comments.
    static WolframLabels parse(std::string_view text);

    /// Throws std::out_of_range if the rule's representative is unlabeled.
    WolframClass at(Rule rule) const;

    std::size_t size() const { return labels_.size(); }
    const std::map<std::uint8_t, WolframClass>& table() const { return labels_; }

  private:
    std::map<std::uint8_t, WolframClass> labels_;
};

/// Reference information classes for the 88 representatives
/// (54 in I1, 24 in I2, 10 in I3), bundled for regression comparison.
class ReferenceClassification {
  public:
    static const ReferenceClassification& bundled();
    static ReferenceClassification parse(std::string_view text);

    InfoClass at(Rule rule) const;
    std::size_t size() const { return classes_.size(); }
    const std::map<std::uint8_t, InfoClass>& table() const { return classes_; }

  private:
    std::map<std::uint8_t, InfoClass> classes_;
};

} // namespace ecainfo
