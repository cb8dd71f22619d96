#pragma once

#include <string>
#include <vector>

#include "gray16/automorphism.hpp"
#include "gray16/catalog.hpp"
#include "gray16/graymap.hpp"
#include "gray16/group.hpp"

namespace gray16 {

// Plain-text group format: "order N", the labels, then the table rows.
std::string group_to_text(const GroupTable& g);
GroupTable group_from_text(const std::string& text);

// Gray-map file: "group <name> length <n>" then "label<TAB>word" per
// element, identity first. Reading resolves the group by builtin name.
std::string graymap_to_text(const GrayMapTable& map, const std::string& group_name);
GrayMapTable graymap_from_text(const std::string& text, std::string* group_name = nullptr);

// One line per generator: "x -> x^3".
std::vector<std::string> automorphism_lines(const GroupTable& g,
                                            const Automorphism& f);

// Aligned human-readable renderings.
std::string graymap_table_text(const GrayMapTable& map);
std::string report_text(const VerificationReport& report);
std::string survey_table_text(const std::vector<SurveyRow>& rows);
std::string survey_tsv(const std::vector<SurveyRow>& rows);
std::string survey_json(const std::vector<SurveyRow>& rows);

}  // namespace gray16
