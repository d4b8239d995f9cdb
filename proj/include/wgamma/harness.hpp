#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wgamma/formulas.hpp"
#include "wgamma/verifier.hpp"

namespace wgamma {

enum class TableFormat { csv, markdown };

/// What to tabulate. Abscissas are kept as the decimal strings they were
/// given in so CSV output reproduces them verbatim.
struct TableSpec {
  std::vector<std::string> abscissas{"1", "2", "5", "10", "20", "50", "100"};
  std::vector<FormulaId> formulas{FormulaId::nemes2, FormulaId::chen, FormulaId::w1, FormulaId::w2};
  long precision_digits = 50;
  TableFormat format = TableFormat::markdown;

  /// Throws std::invalid_argument unless abscissas are positive and strictly
  /// increasing and formulas is nonempty.
  void validate() const;
};

/// One table cell.
struct ErrorRecord {
  std::string x;
  FormulaId formula;
  Real relative_error;
  Real log_gap;
  long digits;
};

/// Thrown when a cell cannot be computed; names the cell.
class CellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One record per (x, formula), ordered by x then by the TableSpec formula order.
std::vector<ErrorRecord> build_table(const TableSpec& spec, bool parallel = true);

/// Header `x,formula,relative_error,log_gap,digits`; values in "%.5e" form
/// (6 significant digits); LF line endings.
std::string table_to_csv(const std::vector<ErrorRecord>& records);
/// Rows are abscissas, columns formulas; relative errors with 4 significant
/// digits.
std::string table_to_markdown(const std::vector<ErrorRecord>& records);
std::string render_table(const std::vector<ErrorRecord>& records, TableFormat format);

/// Parses table_to_csv() output. Throws std::invalid_argument on malformed
/// input.
std::vector<ErrorRecord> parse_table_csv(std::string_view text);

struct GoldenCell {
  std::string x;
  FormulaId formula;
  /// Printed value, 4 significant digits, e.g. "1.114e-4".
  std::string expected_relative_error;
};

/// The 28 printed comparison-table cells.
const std::vector<GoldenCell>& published_table_goldens();

/// True iff |computed - golden| <= 0.5 * 10^(e - digits + 1), where e is the
/// decimal exponent of the golden value.
bool matches_to_significant_digits(const Real& computed, const Real& golden, int digits);

/// Recomputes every cell and compares it with its golden to `tol_sig_digits`
/// (2..4) significant digits. The report fails with the worst cell as witness.
VerificationReport check_goldens(const std::vector<GoldenCell>& cells, int tol_sig_digits = 3,
                                 long precision_digits = 50);

/// Parses "a,b,c" into trimmed nonempty items.
std::vector<std::string> split_list(std::string_view text);

}  // namespace wgamma
