#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>

#include "treeshift/cli.hpp"
#include "treeshift/counts.hpp"
#include "treeshift/numerics/interval.hpp"
#include "treeshift/strip_entropy.hpp"

namespace treeshift::cli {

using numerics::Interval;
using numerics::PrecisionGuard;
using numerics::Rational;

namespace {

// Digits after the decimal point of a printed value such as ".6098".
int decimals(const std::string& printed) {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

// Half a unit in the last printed place.
Rational half_unit(const std::string& printed) {
  return Rational(1, 2) / Rational(10).pow(decimals(printed));
}

std::string show(const Interval& v) { return "[" + v.lower_string(10) + ", " + v.upper_string(10) + "]"; }

// The printed value is the computed one rounded to the printed precision:
// the enclosure meets the rounding window around the printed number.
bool rounds_to(const Interval& v, const std::string& printed) {
  const Rational p = Rational::parse(printed);
  const Rational h = half_unit(printed);
  return v.lower_rational() <= p + h && v.upper_rational() >= p - h;
}

class Report {
 public:
  void exact(const std::string& section, const std::string& name, const std::string& printed,
             const std::string& computed) {
    add(section, name, printed, computed, computed == printed, false);
  }

  void rounded(const std::string& section, const std::string& name, const std::string& printed, const Interval& v,
               bool erratum = false) {
    add(section, name, printed, show(v), rounds_to(v, printed), erratum);
  }

  void rounded(const std::string& section, const std::string& name, const std::string& printed, const Rational& v) {
    const Rational h = half_unit(printed);
    const Rational p = Rational::parse(printed);
    add(section, name, printed, v.to_decimal(decimals(printed) + 2), v >= p - h && v <= p + h, false);
  }

  // printed < v, certified on the enclosure.
  void below(const std::string& section, const std::string& name, const std::string& printed, const Interval& v) {
    add(section, name, "> " + printed, show(v), Rational::parse(printed) < v.lower_rational(), false);
  }

  void verdict(const std::string& section, const std::string& name, const std::string& detail, bool ok) {
    add(section, name, "certified", detail, ok, false);
  }

  ReproduceReport take() { return std::move(report_); }

 private:
  void add(const std::string& section, const std::string& name, const std::string& expected,
           const std::string& computed, bool pass, bool erratum) {
    report_.cells.push_back({section, name, expected, computed, erratum && !pass, pass});
  }

  ReproduceReport report_;
};

struct Table1Row {
  long n;
  const char* B;
  const char* B0;
  const char* r;
  const char* per_size;   // log B_{n-1} / (2^n - 1)
  const char* per_row;    // log B_{n-1} / 2^n
  const char* h;
};

constexpr Table1Row kTable1[] = {
    {1, "2", "1", ".5", ".693", ".347", ".5025"},
    {2, "5", "4", ".8", ".536", ".402", ".5078"},
    {3, "41", "25", ".6098", ".531", ".465", ".50866"},
    {4, "2306", "1681", ".729", ".516", ".484", ".50885"},
    {5, "8143397", "5317636", ".653", ".513", ".497", ".508889"},
};

// log 41 / 8 = 0.46420 is printed as .465.
bool known_erratum(long n, const char* column) { return n == 3 && std::string(column) == "per_row"; }

void table1(Report& rep, const RunConfig& cfg) {
  GoldenChain chain(2, CountOptions{cfg.exact_digit_cap});
  for (const auto& row : kTable1) {
    const std::string tag = "n=" + std::to_string(row.n);
    const GoldenLevel& lvl = chain.level(row.n - 1);
    const auto& s = *lvl.exact;
    rep.exact("table1", tag + " B", row.B, s.total().to_string());
    rep.exact("table1", tag + " B(0)", row.B0, s.b0.to_string());
    rep.rounded("table1", tag + " r(0)", row.r, *lvl.ratio);
    const Interval logB = numerics::log(s.total());
    const long rowsize = 1L << row.n;
    rep.rounded("table1", tag + " log B/(2^n-1)", row.per_size, logB / Interval(rowsize - 1),
                known_erratum(row.n, "per_size"));
    rep.rounded("table1", tag + " log B/2^n", row.per_row, logB / Interval(rowsize), known_erratum(row.n, "per_row"));
    const Interval h = strip_h(chain, row.n).h;
    rep.rounded("table1", tag + " h", row.h, h);
    std::ostringstream w;
    w << "width " << std::scientific << std::setprecision(2) << h.width();
    rep.verdict("table1", tag + " h width", w.str(), h.width() < 1e-6);
  }
}

void chain(Report& rep) {
  const char* sec = "chain";
  const Interval h1 = h1_entropy();
  rep.rounded(sec, "h(1)", ".481", h1);
  rep.rounded(sec, "h(2) lower, n=4", ".509", strip_h(2, 4).h);
  rep.below(sec, "h(3) lower, n=4", ".536", strip_h(3, 4).h);
  rep.rounded(sec, "log B_2^(3)/13", ".548", cross_dim_chain(3, 2, 4).upper);
  rep.below(sec, "h(4) lower, n=4", ".561", strip_h(4, 4).h);
  rep.rounded(sec, "log B_2^(4)/21", ".567", cross_dim_chain(4, 2, 4).upper);
  rep.below(sec, "h(5) lower, n=4", ".58", strip_h(5, 4).h);
  rep.rounded(sec, "log B_2^(5)/31", ".5839", cross_dim_chain(5, 2, 4).upper);
  rep.below(sec, "h(6) lower, n=5", ".5952", strip_h(6, 5).h);

  struct Link {
    int k;
    long m;
  };
  constexpr Link links[] = {{1, 0}, {2, 5}, {3, 2}, {4, 2}, {5, 2}};
  for (const auto& l : links) {
    const CrossDimVerdict v = cross_dim_chain(l.k, l.m, 4);
    rep.verdict(sec, "h(" + std::to_string(l.k) + ") < h(" + std::to_string(l.k + 1) + ")",
                show(v.upper) + " < " + show(v.lower), v.holds());
  }

  const DimIncreaseVerdict d = dim_increase_check(6);
  rep.rounded("dim-increase", "k=6 left side", "2.6611", d.lhs);
  rep.rounded("dim-increase", "k=6 right side", "2.16633", d.rhs);
  rep.verdict("dim-increase", "k=6 inequality", show(d.rhs) + " < " + show(d.lhs), d.holds());
}

void full_shift(Report& rep) {
  const Interval log2 = numerics::log(Interval(2));
  const TransitionMatrix F = TransitionMatrix::full_shift(2);
  const Interval h = general_strip_h(F, 2, 5).h;
  rep.verdict("full-shift", "strip h = log 2", show(h), h.overlaps(log2) && h.width() < 1e-10);
  const Interval s = general_series(F, 2, 10).enclosure();
  rep.verdict("full-shift", "series = log 2", show(s), s.overlaps(log2) && s.width() < 1e-10);
}

}  // namespace

bool ReproduceReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.pass || c.erratum; });
}

ReproduceReport reproduce_paper(const RunConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  Report rep;
  table1(rep, cfg);
  chain(rep);
  full_shift(rep);
  return rep.take();
}

}  // namespace treeshift::cli
