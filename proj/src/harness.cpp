#include "wgamma/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace wgamma {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(std::string(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string cell_name(const std::string& x, FormulaId id) {
  return "(x=" + x + ", " + std::string(tag(id)) + ")";
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& item : split(text, ',')) {
    auto t = trim(item);
    if (t.empty()) throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    out.push_back(std::move(t));
  }
  return out;
}

void TableSpec::validate() const {
  if (formulas.empty()) throw std::invalid_argument("table needs at least one formula");
  if (abscissas.empty()) throw std::invalid_argument("table needs at least one abscissa");
  if (precision_digits <= 0) throw std::invalid_argument("precision digits must be positive");
  const Precision p = OracleConfig::for_digits(precision_digits).working();
  std::optional<Real> prev;
  for (const auto& s : abscissas) {
    const Real x(s, p);
    if (!(x.sign() > 0)) throw std::invalid_argument("abscissa must be positive: " + s);
    if (prev && !(x > *prev)) throw std::invalid_argument("abscissas must be strictly increasing");
    prev = x;
  }
}

std::vector<ErrorRecord> build_table(const TableSpec& spec, bool parallel) {
  spec.validate();
  const OracleConfig cfg = OracleConfig::for_digits(spec.precision_digits);
  const Precision p = cfg.working();

  auto compute = [cfg, p, digits = spec.precision_digits](const std::string& xs, FormulaId id) {
    try {
      LogErrorValue v = log_error(id, Real(xs, p), cfg);
      mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);
      return ErrorRecord{xs, id, std::move(v.relative_error), std::move(v.log_gap), digits};
    } catch (const std::exception& e) {
      mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);
      throw CellError("cell " + cell_name(xs, id) + ": " + e.what());
    }
  };

  std::vector<ErrorRecord> out;
  if (!parallel) {
    for (const auto& x : spec.abscissas)
      for (FormulaId id : spec.formulas) out.push_back(compute(x, id));
    return out;
  }
  std::vector<std::future<ErrorRecord>> futures;
  for (const auto& x : spec.abscissas)
    for (FormulaId id : spec.formulas) futures.push_back(std::async(std::launch::async, compute, x, id));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::string table_to_csv(const std::vector<ErrorRecord>& records) {
  std::ostringstream os;
  os << "x,formula,relative_error,log_gap,digits\n";
  for (const auto& r : records) {
    os << r.x << ',' << tag(r.formula) << ',' << r.relative_error.sci(6) << ',' << r.log_gap.sci(6)
       << ',' << r.digits << '\n';
  }
  return os.str();
}

std::string table_to_markdown(const std::vector<ErrorRecord>& records) {
  std::vector<std::string> xs;
  std::vector<FormulaId> formulas;
  for (const auto& r : records) {
    if (std::find(xs.begin(), xs.end(), r.x) == xs.end()) xs.push_back(r.x);
    if (std::find(formulas.begin(), formulas.end(), r.formula) == formulas.end()) {
      formulas.push_back(r.formula);
    }
  }
  std::ostringstream os;
  os << "| x |";
  for (FormulaId id : formulas) os << ' ' << tag(id) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < formulas.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& x : xs) {
    os << "| " << x << " |";
    for (FormulaId id : formulas) {
      const auto it = std::find_if(records.begin(), records.end(),
                                   [&](const ErrorRecord& r) { return r.x == x && r.formula == id; });
      os << ' ' << (it == records.end() ? std::string("-") : it->relative_error.sci(4)) << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string render_table(const std::vector<ErrorRecord>& records, TableFormat format) {
  return format == TableFormat::csv ? table_to_csv(records) : table_to_markdown(records);
}

std::vector<ErrorRecord> parse_table_csv(std::string_view text) {
  std::vector<ErrorRecord> out;
  const auto lines = split(text, '\n');
  if (lines.empty() || lines.front() != "x,formula,relative_error,log_gap,digits") {
    throw std::invalid_argument("missing or unexpected CSV header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      if (i + 1 == lines.size()) break;
      throw std::invalid_argument("blank CSV line " + std::to_string(i + 1));
    }
    const auto f = split(lines[i], ',');
    if (f.size() != 5) throw std::invalid_argument("CSV line " + std::to_string(i + 1) + ": expected 5 fields");
    const auto id = parse_formula(f[1]);
    if (!id) throw std::invalid_argument("CSV line " + std::to_string(i + 1) + ": unknown formula " + f[1]);
    std::size_t used = 0;
    const long digits = std::stol(f[4], &used);
    if (used != f[4].size()) throw std::invalid_argument("bad digits field: " + f[4]);
    const Precision p{kMinPrecisionBits};
    out.push_back({f[0], *id, Real(f[2], p), Real(f[3], p), digits});
  }
  return out;
}

const std::vector<GoldenCell>& published_table_goldens() {
  using F = FormulaId;
  static const std::vector<GoldenCell> cells{
      {"1", F::nemes2, "1.114e-4"},    {"1", F::chen, "1.398e-4"},
      {"1", F::w1, "1.832e-4"},        {"1", F::w2, "2.407e-5"},
      {"2", F::nemes2, "1.900e-6"},    {"2", F::chen, "2.222e-6"},
      {"2", F::w1, "2.668e-6"},        {"2", F::w2, "2.308e-7"},
      {"5", F::nemes2, "4.353e-9"},    {"5", F::chen, "4.956e-9"},
      {"5", F::w1, "5.743e-9"},        {"5", F::w2, "1.249e-10"},
      {"10", F::nemes2, "3.609e-11"},  {"10", F::chen, "4.088e-11"},
      {"10", F::w1, "4.710e-11"},      {"10", F::w2, "2.785e-13"},
      {"20", F::nemes2, "2.864e-13"},  {"20", F::chen, "3.240e-13"},
      {"20", F::w1, "3.727e-13"},      {"20", F::w2, "5.634e-16"},
      {"50", F::nemes2, "4.713e-16"},  {"50", F::chen, "5.330e-16"},
      {"50", F::w1, "6.129e-16"},      {"50", F::w2, "1.492e-19"},
      {"100", F::nemes2, "3.684e-18"}, {"100", F::chen, "4.166e-18"},
      {"100", F::w1, "4.791e-18"},     {"100", F::w2, "2.918e-22"},
  };
  return cells;
}

bool matches_to_significant_digits(const Real& computed, const Real& golden, int digits) {
  if (!(golden.sign() > 0)) throw std::invalid_argument("golden value must be positive");
  const Precision p = std::max(computed.precision(), golden.precision());
  Real l10(p);
  mpfr_log10(l10.get(), golden.get(), MPFR_RNDN);
  const long e = static_cast<long>(std::floor(l10.to_double()));
  const Real half_unit = pow(Real(10, p), e - digits + 1) / 2;
  return abs(computed - golden) <= half_unit;
}

VerificationReport check_goldens(const std::vector<GoldenCell>& cells, int tol_sig_digits,
                                 long precision_digits) {
  if (tol_sig_digits < 2 || tol_sig_digits > 4) {
    throw std::invalid_argument("tolerance must be 2..4 significant digits");
  }
  VerificationReport rep{"table_goldens"};
  const OracleConfig cfg = OracleConfig::for_digits(precision_digits);
  const Precision p = cfg.working();

  std::vector<std::future<Real>> futures;
  for (const auto& c : cells) {
    futures.push_back(std::async(std::launch::async, [&cfg, &c, p] {
      Real r = log_error(c.formula, Real(c.x, p), cfg).relative_error;
      mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);
      return r;
    }));
  }

  std::optional<std::size_t> worst;
  Real worst_dev(p);
  int failures = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const Real computed = futures[i].get();
    const Real golden(c.expected_relative_error, p);
    const Real dev = abs(computed / golden - 1);
    const bool ok = matches_to_significant_digits(computed, golden, tol_sig_digits);
    const std::string desc = cell_name(c.x, c.formula);
    const std::string val = "computed " + computed.sci(6) + ", golden " + c.expected_relative_error;
    if (!ok) ++failures;
    if (ok) rep.note(desc + " matches", val);
    else rep.require(false, desc + " matches to " + std::to_string(tol_sig_digits) + " digits", val);
    if (!worst || dev > worst_dev) {
      worst = i;
      worst_dev = dev;
    }
  }
  rep.tolerance_used = Real(tol_sig_digits, p);
  if (worst) {
    const auto& c = cells[*worst];
    rep.note("worst cell " + cell_name(c.x, c.formula), "relative deviation " + worst_dev.sci(3));
  }
  rep.note("failing cells", std::to_string(failures) + " of " + std::to_string(cells.size()));
  return rep;
}

}  // namespace wgamma
