#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fwb/burnside.hpp"
#include "fwb/fw.hpp"
#include "fwb/subgroup_lattice.hpp"

namespace fwb::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

Format parse_format(std::string_view name);

/// Rows with a header; rendered as CSV or as an aligned text table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Everything a command prints, in both shapes.
struct Output {
  Json json;
  Table table;
};

std::string render(const Output& out, Format format);
std::string to_csv(const Table& table);
std::string to_text(const Table& table);

// -- elements ---------------------------------------------------------------

/// [["order=k:i", "p/q"], ...] listing the nonzero coefficients in class order.
Json element_to_json(const BurnsideElement& x);
/// Inverse of element_to_json. Throws ParseError on malformed input,
/// unknown or repeated labels.
BurnsideElement element_from_json(const Json& j, const RingPtr& ring);
/// Parses `text` as JSON when it starts with '[', otherwise reads the file it names.
BurnsideElement read_element(const std::string& text_or_path, const RingPtr& ring);

// -- subgroup selectors -----------------------------------------------------

/// `center`, `frattini`, `maxcyc`, `whole`, `trivial` or `order=<k>:<i>`.
/// Throws ParseError for unknown selectors or labels.
SubgroupId select_subgroup(const SubgroupLattice& lattice, std::string_view selector);

// -- commands ---------------------------------------------------------------

Output group_command(const std::string& spec, std::size_t cap);
Output lattice_command(const std::string& spec, std::size_t cap);
Output marks_command(const std::string& spec, std::size_t cap);
Output idempotents_command(const std::string& spec, std::size_t cap);
/// m_{L,K}; the K selector is evaluated inside L viewed as a group.
Output mconst_command(const std::string& spec, const std::string& l_selector, const std::string& k_selector,
                      std::size_t cap);
Output op_command(BisetOp op, const std::string& spec, const std::string& selector, const std::string& element,
                  std::size_t cap);
Output fw_apply_command(const std::string& spec, const std::string& element, std::size_t cap);
Output fw_check_command(BisetOp op, const std::string& spec, const std::string& selector, std::size_t cap);

// -- survey -----------------------------------------------------------------

/// Operations a survey can run; each gets its own commutes_<op> column.
inline constexpr BisetOp kSurveyOps[] = {BisetOp::Inflation, BisetOp::Induction, BisetOp::TensorInduction,
                                         BisetOp::Deflation};

/// Comma-separated subset of inf,ind,ten,def, or "all".
std::vector<BisetOp> parse_survey_ops(std::string_view list);

/// Group specs, one per line; blank lines and '#' comments are skipped.
std::vector<std::string> read_catalog(const std::string& path);

struct SurveyRow {
  std::string group;
  std::size_t order = 0;
  std::string n_selector;
  std::size_t n_order = 0;
  bool gcd = false;
  bool cyclic = false;
  bool central = false;
  bool m_equal = false;
  // "true", "false" or "-" when not requested, indexed like kSurveyOps.
  std::string commutes[4] = {"-", "-", "-", "-"};
  std::string error;
};

/// One row per (group, normal subgroup), groups in catalog order and normal
/// subgroups in canonical order. Failures are recorded in the row's error
/// field. Groups may be processed on `threads` worker threads; the result
/// does not depend on it.
std::vector<SurveyRow> run_survey(const std::vector<std::string>& catalog, const std::vector<BisetOp>& ops,
                                  std::size_t cap = kDefaultOrderCap, std::size_t threads = 1);

Table survey_table(const std::vector<SurveyRow>& rows);

}  // namespace fwb::cli
