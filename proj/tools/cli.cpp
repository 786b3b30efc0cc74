#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robin/explorer.hpp"
#include "robin/primes.hpp"
#include "robin/theorems.hpp"

namespace robin::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Human, Csv, Json, Svg };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDisplayDigits = 6;
constexpr std::uint64_t kPrintableBits = 4096;

std::string dec(const ExactRatio& x) { return x.to_decimal(kDisplayDigits); }
std::string dec(const Dyadic& x) { return x.to_ratio().to_decimal(kDisplayDigits); }
std::string dec(const RealInterval& x) { return x.midpoint().to_decimal(kDisplayDigits); }

json enclosure(const RealInterval& x) { return {{"lo", x.lo().to_decimal()}, {"hi", x.hi().to_decimal()}}; }

json enclosure_or_null(const std::optional<RealInterval>& x) {
  return x ? enclosure(*x) : json(nullptr);
}

std::string reason_text(VerdictReason r) { return r == VerdictReason::RhsUndefined ? "rhs-undefined" : ""; }

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return kOk;
    case Verdict::Violated: return kFound;
    case Verdict::Indeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

// log10 n from the certified ln n enclosure.
ExactRatio log10_estimate(const Factorization& f) {
  const RealInterval ln_n = log_n(f, 64);
  const RealInterval ln10 = ln_interval(ExactRatio(10), 64);
  const ExactRatio lo = ln_n.lo().to_ratio() / ln10.hi().to_ratio();
  const ExactRatio hi = ln_n.hi().to_ratio() / ln10.lo().to_ratio();
  return (lo + hi) / ExactRatio(2);
}

std::string n_text(const Factorization& f) {
  return f.log2_upper_bound() <= kPrintableBits ? f.value().get_str() : std::string();
}

// ------------------------------------------------------------------- svg

struct Series {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

struct Chart {
  std::string title;
  std::string x_label;
  bool log_x = false;
  std::vector<Series> series;
  std::optional<double> vertical_marker;
  std::optional<double> horizontal_marker;
};

std::vector<std::pair<double, double>> thin(const std::vector<std::pair<double, double>>& pts, std::size_t cap) {
  if (pts.size() <= cap) return pts;
  std::vector<std::pair<double, double>> out;
  const double step = static_cast<double>(pts.size() - 1) / static_cast<double>(cap - 1);
  for (std::size_t i = 0; i < cap; ++i) out.push_back(pts[static_cast<std::size_t>(std::llround(i * step))]);
  return out;
}

void write_svg(std::ostream& out, const Chart& c) {
  const double width = 800;
  const double height = 500;
  const double left = 70;
  const double right = 20;
  const double top = 40;
  const double bottom = 50;
  auto xv = [&](double x) { return c.log_x ? std::log10(x) : x; };

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : c.series) {
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, xv(x));
      x1 = std::max(x1, xv(x));
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (c.horizontal_marker) {
    y0 = std::min(y0, *c.horizontal_marker);
    y1 = std::max(y1, *c.horizontal_marker);
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  y0 = std::min(y0, 0.0);
  auto px = [&](double x) { return left + (xv(x) - x0) / (x1 - x0) * (width - left - right); };
  auto py = [&](double y) { return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom); };

  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << c.title
      << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">" << c.x_label
      << "</text>\n";
  out << "<text x=\"" << left - 8 << "\" y=\"" << py(y1) + 4 << "\" text-anchor=\"end\">" << y1 << "</text>\n";
  out << "<text x=\"" << left - 8 << "\" y=\"" << py(y0) + 4 << "\" text-anchor=\"end\">" << y0 << "</text>\n";

  double legend_y = top + 10;
  for (const auto& s : c.series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : thin(s.points, 2000)) {
      if (!first) out << ' ';
      first = false;
      out << px(x) << ',' << py(y);
    }
    out << "\"/>\n";
    out << "<text x=\"" << left + 12 << "\" y=\"" << legend_y << "\" fill=\"" << s.color << "\">" << s.name
        << "</text>\n";
    legend_y += 18;
  }
  if (c.vertical_marker) {
    const double x = px(*c.vertical_marker);
    out << "<line x1=\"" << x << "\" y1=\"" << top << "\" x2=\"" << x << "\" y2=\"" << height - bottom
        << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  if (c.horizontal_marker) {
    const double y = py(*c.horizontal_marker);
    out << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << width - right << "\" y2=\"" << y
        << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  out << "</svg>\n";
}

// --------------------------------------------------------------- commands

struct Context {
  PrecisionConfig cfg;
  unsigned jobs = 1;
  Format format = Format::Human;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  std::ostream& summary() const { return format == Format::Human ? *out : *err; }
};

Factorization parse_target(const std::string& arg) {
  const bool digits = !arg.empty() && std::all_of(arg.begin(), arg.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
  if (!digits) return parse_factor_string(arg);
  const ExactInt n(arg, 10);
  if (n < 2) throw UsageError("n must be >= 2");
  return factorize(n);
}

int cmd_check(const Context& ctx, const std::string& arg) {
  const Factorization f = parse_target(arg);
  const CheckResult r = check(f, ctx.cfg);
  std::ostream& out = *ctx.out;
  const std::string n = n_text(f);
  const std::string log10n = dec(log10_estimate(f));
  const std::string margin = r.margin_lower_bound ? r.margin_lower_bound->to_decimal() : "";

  switch (ctx.format) {
    case Format::Human:
      if (!n.empty()) {
        out << "n: " << n << '\n';
      } else {
        out << "log10(n): " << log10n << '\n';
      }
      out << "factorization: " << f.to_string() << '\n';
      out << "sigma(n)/n: " << r.lhs.to_string() << " (~" << dec(r.lhs) << ")\n";
      if (r.rhs) {
        out << "rhs: ~" << dec(*r.rhs) << " in [" << r.rhs->lo().to_decimal() << ", " << r.rhs->hi().to_decimal()
            << "]\n";
      } else {
        out << "rhs: undefined (ln ln n <= 0)\n";
      }
      out << "verdict: " << to_string(r.verdict) << '\n';
      if (r.reason != VerdictReason::None) out << "reason: " << reason_text(r.reason) << '\n';
      if (r.margin_lower_bound) out << "margin_lower_bound: " << dec(*r.margin_lower_bound) << '\n';
      out << "precision_bits: " << r.precision_used << '\n';
      break;
    case Format::Csv:
      out << "n,log10_n,factorization,sigma_over_n_num,sigma_over_n_den,sigma_over_n_dec,rhs_lo,rhs_hi,verdict,"
             "reason,margin_lower_bound,precision_bits\n";
      out << n << ',' << log10n << ',' << f.to_string() << ',' << r.lhs.numerator().get_str() << ','
          << r.lhs.denominator().get_str() << ',' << dec(r.lhs) << ',' << (r.rhs ? r.rhs->lo().to_decimal() : "")
          << ',' << (r.rhs ? r.rhs->hi().to_decimal() : "") << ',' << to_string(r.verdict) << ','
          << reason_text(r.reason) << ',' << margin << ',' << r.precision_used << '\n';
      break;
    case Format::Json: {
      json j;
      j["n"] = n;
      j["log10_n"] = log10n;
      j["factorization"] = f.to_string();
      j["sigma_over_n_num"] = r.lhs.numerator().get_str();
      j["sigma_over_n_den"] = r.lhs.denominator().get_str();
      j["sigma_over_n_dec"] = dec(r.lhs);
      j["rhs"] = enclosure_or_null(r.rhs);
      j["verdict"] = to_string(r.verdict);
      j["reason"] = reason_text(r.reason);
      j["margin_lower_bound"] = margin;
      j["precision_bits"] = r.precision_used;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Svg: throw UsageError("svg output is only available for conjecture1 and bounds");
  }
  return exit_for(r.verdict);
}

int cmd_scan(const Context& ctx, std::uint64_t from, std::uint64_t to) {
  if (from < 2 || from > to) throw UsageError("scan needs 2 <= FROM <= TO");
  std::ostream& out = *ctx.out;
  json rows = json::array();
  if (ctx.format == Format::Csv) out << "n,sigma,sigma_over_n_num,sigma_over_n_den,rhs_lo,rhs_hi,reason\n";

  const ScanReport rep = scan_range(from, to, ctx.cfg, ctx.jobs, [&](const ScanViolation& v) {
    const CheckResult& r = v.result;
    const std::string s = sigma(r.factorization).get_str();
    switch (ctx.format) {
      case Format::Csv:
        out << v.n << ',' << s << ',' << r.lhs.numerator().get_str() << ',' << r.lhs.denominator().get_str() << ','
            << (r.rhs ? r.rhs->lo().to_decimal() : "") << ',' << (r.rhs ? r.rhs->hi().to_decimal() : "") << ','
            << reason_text(r.reason) << '\n';
        out.flush();
        break;
      case Format::Human:
        out << "violation n=" << v.n << " sigma(n)/n=" << r.lhs.to_string() << " (~" << dec(r.lhs) << ")"
            << (r.rhs ? " rhs~" + dec(*r.rhs) : " rhs undefined") << '\n';
        break;
      case Format::Json:
        rows.push_back({{"n", v.n},
                        {"sigma", s},
                        {"sigma_over_n_num", r.lhs.numerator().get_str()},
                        {"sigma_over_n_den", r.lhs.denominator().get_str()},
                        {"rhs", enclosure_or_null(r.rhs)},
                        {"reason", reason_text(r.reason)}});
        break;
      case Format::Svg: break;
    }
  });

  if (ctx.format == Format::Json) {
    json j;
    j["from"] = from;
    j["to"] = to;
    j["checked"] = rep.checked_count;
    j["satisfied"] = rep.satisfied_count;
    j["violations"] = rows;
    j["indeterminates"] = rep.indeterminates;
    out << j.dump(2) << '\n';
  }
  if (ctx.format == Format::Human) {
    for (const auto n : rep.indeterminates) out << "indeterminate n=" << n << '\n';
  }
  ctx.summary() << "checked=" << rep.checked_count << " satisfied=" << rep.satisfied_count
                << " violations=" << rep.violations.size() << " indeterminates=" << rep.indeterminates.size()
                << '\n';
  if (!rep.violations.empty()) return kFound;
  return rep.indeterminates.empty() ? kOk : kIndeterminate;
}

int cmd_conjecture1(const Context& ctx, std::size_t m_max) {
  if (m_max < 1) throw UsageError("M_MAX must be >= 1");
  std::ostream& out = *ctx.out;
  const std::string undefined = "undefined";
  json rows = json::array();
  Chart chart;
  chart.title = "q_m (sigma/n of the m-th primorial) vs alpha_m (e^gamma ln ln)";
  chart.x_label = "m (log scale)";
  chart.log_x = true;
  chart.series = {{"q_m", "#1f77b4", {}}, {"alpha_m", "#d62728", {}}};

  if (ctx.format == Format::Csv) {
    out << "m,p_m,q_m_num,q_m_den,q_m_dec,alpha_lo,alpha_hi,ratio_lo,ratio_hi,n_exceeds_5040\n";
  } else if (ctx.format == Format::Human) {
    out << std::left << std::setw(8) << "m" << std::setw(10) << "p_m" << std::setw(10) << "q_m" << std::setw(10)
        << "alpha_m" << std::setw(10) << "ratio" << "n>5040\n";
  }

  for_each_conjecture_row(m_max, ctx.cfg, [&](const ConjectureRow& r) {
    const auto lo = [&](const std::optional<RealInterval>& x) { return x ? x->lo().to_decimal() : undefined; };
    const auto hi = [&](const std::optional<RealInterval>& x) { return x ? x->hi().to_decimal() : undefined; };
    switch (ctx.format) {
      case Format::Csv:
        out << r.m << ',' << r.p_m << ',' << r.q_m.numerator().get_str() << ',' << r.q_m.denominator().get_str()
            << ',' << dec(r.q_m) << ',' << lo(r.alpha_m) << ',' << hi(r.alpha_m) << ',' << lo(r.ratio) << ','
            << hi(r.ratio) << ',' << (r.n_exceeds_5040 ? "true" : "false") << '\n';
        break;
      case Format::Human:
        out << std::left << std::setw(8) << r.m << std::setw(10) << r.p_m << std::setw(10) << dec(r.q_m)
            << std::setw(10) << (r.alpha_m ? dec(*r.alpha_m) : undefined) << std::setw(10)
            << (r.ratio ? dec(*r.ratio) : undefined) << (r.n_exceeds_5040 ? "yes" : "no") << '\n';
        break;
      case Format::Json:
        rows.push_back({{"m", r.m},
                        {"p_m", r.p_m},
                        {"q_m_num", r.q_m.numerator().get_str()},
                        {"q_m_den", r.q_m.denominator().get_str()},
                        {"q_m_dec", dec(r.q_m)},
                        {"alpha", enclosure_or_null(r.alpha_m)},
                        {"ratio", enclosure_or_null(r.ratio)},
                        {"n_exceeds_5040", r.n_exceeds_5040}});
        break;
      case Format::Svg: {
        const auto m = static_cast<double>(r.m);
        chart.series[0].points.emplace_back(m, r.q_m.get().get_d());
        if (r.alpha_m) chart.series[1].points.emplace_back(m, r.alpha_m->midpoint().get().get_d());
        if (r.n_exceeds_5040 && !chart.vertical_marker) chart.vertical_marker = m;
        break;
      }
    }
  });

  if (ctx.format == Format::Json) out << rows.dump(2) << '\n';
  if (ctx.format == Format::Svg) write_svg(out, chart);
  return kOk;
}

int cmd_bounds(const Context& ctx, std::size_t m_max) {
  if (m_max < 1) throw UsageError("M_MAX must be >= 1");
  std::ostream& out = *ctx.out;
  json rows = json::array();
  Chart chart;
  chart.title = "first-m-primes bounds vs e^gamma ln ln 5040";
  chart.x_label = "m";
  chart.series = {{"prod p/(p-1)", "#1f77b4", {}}, {"prod (p+1)/p", "#2ca02c", {}}};

  if (ctx.format == Format::Csv) {
    out << "m,p_m,unbounded_num,unbounded_den,unbounded_dec,unbounded_pass,squarefree_num,squarefree_den,"
           "squarefree_dec,squarefree_pass,threshold_lo,threshold_hi\n";
  } else if (ctx.format == Format::Human) {
    out << std::left << std::setw(6) << "m" << std::setw(8) << "p_m" << std::setw(12) << "p/(p-1)" << std::setw(6)
        << "pass" << std::setw(12) << "(p+1)/p" << "pass\n";
  }
  const auto yes = [](bool b) { return b ? "true" : "false"; };
  for (std::size_t m = 1; m <= m_max; ++m) {
    const BoundReport u = unbounded_exponent_bound(m, ctx.cfg.start_bits);
    const BoundReport s = squarefree_bound(m, ctx.cfg.start_bits);
    switch (ctx.format) {
      case Format::Csv:
        out << m << ',' << u.p_m << ',' << u.bound_value.numerator().get_str() << ','
            << u.bound_value.denominator().get_str() << ',' << dec(u.bound_value) << ',' << yes(u.passes) << ','
            << s.bound_value.numerator().get_str() << ',' << s.bound_value.denominator().get_str() << ','
            << dec(s.bound_value) << ',' << yes(s.passes) << ',' << u.threshold.lo().to_decimal() << ','
            << u.threshold.hi().to_decimal() << '\n';
        break;
      case Format::Human:
        out << std::left << std::setw(6) << m << std::setw(8) << u.p_m << std::setw(12) << dec(u.bound_value)
            << std::setw(6) << (u.passes ? "yes" : "no") << std::setw(12) << dec(s.bound_value)
            << (s.passes ? "yes" : "no") << '\n';
        break;
      case Format::Json:
        rows.push_back({{"m", m},
                        {"p_m", u.p_m},
                        {"unbounded_num", u.bound_value.numerator().get_str()},
                        {"unbounded_den", u.bound_value.denominator().get_str()},
                        {"unbounded_dec", dec(u.bound_value)},
                        {"unbounded_pass", u.passes},
                        {"squarefree_num", s.bound_value.numerator().get_str()},
                        {"squarefree_den", s.bound_value.denominator().get_str()},
                        {"squarefree_dec", dec(s.bound_value)},
                        {"squarefree_pass", s.passes},
                        {"threshold", enclosure(u.threshold)}});
        break;
      case Format::Svg:
        chart.series[0].points.emplace_back(static_cast<double>(m), u.bound_value.get().get_d());
        chart.series[1].points.emplace_back(static_cast<double>(m), s.bound_value.get().get_d());
        chart.horizontal_marker = u.threshold.midpoint().get().get_d();
        break;
    }
  }
  if (ctx.format == Format::Human) out << "threshold e^gamma ln ln 5040 ~ " << dec(threshold_5040()) << '\n';
  if (ctx.format == Format::Json) out << rows.dump(2) << '\n';
  if (ctx.format == Format::Svg) write_svg(out, chart);
  return kOk;
}

int cmd_prime_powers(const Context& ctx, std::uint64_t limit) {
  if (limit <= 5040) throw UsageError("LIMIT must exceed 5040");
  if (ctx.format == Format::Svg) throw UsageError("svg output is only available for conjecture1 and bounds");
  std::ostream& out = *ctx.out;
  const std::vector<CheckResult> results = verify_prime_powers(limit, ctx.cfg);
  std::size_t violated = 0;
  std::size_t indeterminate = 0;
  json rows = json::array();
  if (ctx.format == Format::Csv) out << "n,p,k,lhs_num,lhs_den,rhs_lo,rhs_hi,verdict\n";
  for (const auto& r : results) {
    violated += r.verdict == Verdict::Violated;
    indeterminate += r.verdict == Verdict::Indeterminate;
    const PrimePower& pk = r.factorization[0];
    const std::string n = r.factorization.value().get_str();
    if (ctx.format == Format::Csv) {
      out << n << ',' << pk.prime << ',' << pk.exponent << ',' << r.lhs.numerator().get_str() << ','
          << r.lhs.denominator().get_str() << ',' << (r.rhs ? r.rhs->lo().to_decimal() : "") << ','
          << (r.rhs ? r.rhs->hi().to_decimal() : "") << ',' << to_string(r.verdict) << '\n';
    } else if (ctx.format == Format::Json) {
      rows.push_back({{"n", n},
                      {"p", pk.prime},
                      {"k", pk.exponent},
                      {"lhs_num", r.lhs.numerator().get_str()},
                      {"lhs_den", r.lhs.denominator().get_str()},
                      {"rhs", enclosure_or_null(r.rhs)},
                      {"verdict", to_string(r.verdict)}});
    } else if (r.verdict != Verdict::Satisfied) {
      out << to_string(r.verdict) << " n=" << n << " (" << r.factorization.to_string() << ")\n";
    }
  }
  if (ctx.format == Format::Json) out << rows.dump(2) << '\n';
  ctx.summary() << "prime powers in (5040, " << limit << "]: " << results.size() << " checked, " << violated
                << " violated, " << indeterminate << " indeterminate\n";
  if (violated > 0) return kFound;
  return indeterminate > 0 ? kIndeterminate : kOk;
}

int cmd_substitute(const Context& ctx, const std::string& factors, std::size_t index, std::uint64_t new_prime) {
  if (ctx.format == Format::Svg) throw UsageError("svg output is only available for conjecture1 and bounds");
  const SubstitutionReport rep = substitution_report(parse_factor_string(factors), index, new_prime, ctx.cfg);
  std::ostream& out = *ctx.out;
  const auto yes = [](bool b) { return b ? "true" : "false"; };
  switch (ctx.format) {
    case Format::Human:
      out << "before: " << rep.before.factorization.to_string() << " sigma(n)/n ~" << dec(rep.before.lhs) << " "
          << to_string(rep.before.verdict) << '\n';
      out << "after:  " << rep.after.factorization.to_string() << " sigma(n)/n ~" << dec(rep.after.lhs) << " "
          << to_string(rep.after.verdict) << '\n';
      out << "replaced " << rep.old_prime << " by " << rep.new_prime << " at index " << rep.index << '\n';
      out << "lhs_decreased: " << yes(rep.lhs_decreased) << '\n';
      out << "rhs_increased: " << yes(rep.rhs_increased) << '\n';
      break;
    case Format::Csv:
      out << "before,after,index,old_prime,new_prime,before_verdict,after_verdict,lhs_decreased,rhs_increased\n";
      out << rep.before.factorization.to_string() << ',' << rep.after.factorization.to_string() << ',' << rep.index
          << ',' << rep.old_prime << ',' << rep.new_prime << ',' << to_string(rep.before.verdict) << ','
          << to_string(rep.after.verdict) << ',' << yes(rep.lhs_decreased) << ',' << yes(rep.rhs_increased) << '\n';
      break;
    case Format::Json: {
      json j;
      j["before"] = rep.before.factorization.to_string();
      j["after"] = rep.after.factorization.to_string();
      j["index"] = rep.index;
      j["old_prime"] = rep.old_prime;
      j["new_prime"] = rep.new_prime;
      j["before_verdict"] = to_string(rep.before.verdict);
      j["after_verdict"] = to_string(rep.after.verdict);
      j["lhs_decreased"] = rep.lhs_decreased;
      j["rhs_increased"] = rep.rhs_increased;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Svg: break;
  }
  return exit_for(rep.after.verdict);
}

int cmd_conjecture2(const Context& ctx, SearchOptions opts, bool allow_more_primes) {
  if (ctx.format == Format::Svg) throw UsageError("svg output is only available for conjecture1 and bounds");
  if (opts.prime_count_max > 9 && !allow_more_primes) {
    throw UsageError(
        "--primes above 9 goes past the justified pruning range; pass --no-prune-justification to "
        "run it anyway");
  }
  opts.worker_count = ctx.jobs;
  const SearchReport rep = conjecture32_search(opts, ctx.cfg);
  std::ostream& out = *ctx.out;
  switch (ctx.format) {
    case Format::Human:
      for (const auto& b : rep.unsatisfied_bases) {
        out << "base not satisfied: " << b.factorization.to_string() << " " << to_string(b.verdict) << '\n';
      }
      for (const auto& c : rep.counterexamples) {
        out << "counterexample: " << c.base.to_string() << " raise index " << c.index << " -> "
            << c.after.factorization.to_string() << " " << to_string(c.after.verdict) << '\n';
      }
      break;
    case Format::Csv:
      out << "base,index,after,verdict\n";
      for (const auto& c : rep.counterexamples) {
        out << c.base.to_string() << ',' << c.index << ',' << c.after.factorization.to_string() << ','
            << to_string(c.after.verdict) << '\n';
      }
      break;
    case Format::Json: {
      json j;
      j["candidates"] = rep.candidate_count;
      j["probed"] = rep.probed_count;
      j["unsatisfied_bases"] = json::array();
      for (const auto& b : rep.unsatisfied_bases) j["unsatisfied_bases"].push_back(b.factorization.to_string());
      j["counterexamples"] = json::array();
      for (const auto& c : rep.counterexamples) {
        j["counterexamples"].push_back({{"base", c.base.to_string()},
                                        {"index", c.index},
                                        {"after", c.after.factorization.to_string()},
                                        {"verdict", to_string(c.after.verdict)}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Svg: break;
  }
  ctx.summary() << "candidates=" << rep.candidate_count << " probed=" << rep.probed_count
                << " unsatisfied_bases=" << rep.unsatisfied_bases.size()
                << " counterexamples=" << rep.counterexamples.size() << '\n';
  return rep.counterexamples.empty() && rep.unsatisfied_bases.empty() ? kOk : kFound;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robin's inequality checker and explorer", "robin"};
  app.require_subcommand(1);
  app.fallthrough();

  int precision_bits = 53;
  int max_precision_bits = 4096;
  int escalation = 2;
  unsigned jobs = 1;
  std::string format = "human";
  std::string output;
  app.add_option("--precision-bits", precision_bits, "starting precision in bits")->capture_default_str();
  app.add_option("--max-precision-bits", max_precision_bits, "precision ceiling before Indeterminate")
      ->capture_default_str();
  app.add_option("--escalation", escalation, "precision multiplier per retry")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for scan and conjecture2")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "csv", "json", "svg"}))
      ->capture_default_str();
  app.add_option("--output", output, "write the report to PATH instead of stdout");

  std::string target;
  auto* check_cmd = app.add_subcommand("check", "check one integer or factor string such as 2^4*3^2*5*7");
  check_cmd->add_option("N", target, "decimal integer >= 2 or factor string")->required();

  std::uint64_t from = 0;
  std::uint64_t to = 0;
  auto* scan_cmd = app.add_subcommand("scan", "check every n in [FROM, TO] and list violations");
  scan_cmd->add_option("FROM", from)->required();
  scan_cmd->add_option("TO", to)->required();

  std::size_t m_max = 0;
  auto* c1_cmd = app.add_subcommand("conjecture1", "q_m vs alpha_m over the first M_MAX primorials");
  c1_cmd->add_option("M_MAX", m_max)->required();

  SearchOptions search;
  bool no_prune_justification = false;
  bool all_arrangements = false;
  auto* c2_cmd = app.add_subcommand("conjecture2", "bounded search for exponent increments that break the inequality");
  c2_cmd->add_option("--primes", search.prime_count_max, "use the first P primes")->capture_default_str();
  c2_cmd->add_option("--max-exp", search.exponent_max, "largest exponent")->capture_default_str();
  c2_cmd->add_option("--max-log-n", search.log_n_max, "bound on ln n")->capture_default_str();
  c2_cmd->add_flag("--no-prune-justification", no_prune_justification, "allow --primes above 9");
  c2_cmd->add_flag("--all-arrangements", all_arrangements,
                   "visit every exponent vector, not only non-increasing ones");

  std::size_t bounds_m = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "first-m-primes bounds against e^gamma ln ln 5040");
  bounds_cmd->add_option("M_MAX", bounds_m)->required();

  std::uint64_t pp_limit = 0;
  auto* pp_cmd = app.add_subcommand("prime-powers", "check every prime power in (5040, LIMIT]");
  pp_cmd->add_option("LIMIT", pp_limit)->required();

  std::string sub_factors;
  std::size_t sub_index = 0;
  std::uint64_t sub_prime = 0;
  auto* sub_cmd = app.add_subcommand("substitute", "replace one prime by a larger one and compare both checks");
  sub_cmd->add_option("FACTORS", sub_factors)->required();
  sub_cmd->add_option("INDEX", sub_index, "0-based position in the sorted factorization")->required();
  sub_cmd->add_option("NEW_PRIME", sub_prime)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx;
    ctx.cfg = {precision_bits, max_precision_bits, escalation};
    ctx.cfg.validate();
    ctx.jobs = std::max(jobs, 1U);
    ctx.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : format == "svg" ? Format::Svg
                                                                                                    : Format::Human;
    ctx.err = &err;
    std::ofstream file;
    if (!output.empty()) {
      file.open(output);
      if (!file) throw UsageError("cannot open " + output);
      ctx.out = &file;
    } else {
      ctx.out = &out;
    }

    if (check_cmd->parsed()) return cmd_check(ctx, target);
    if (scan_cmd->parsed()) {
      if (ctx.format == Format::Svg) throw UsageError("svg output is only available for conjecture1 and bounds");
      return cmd_scan(ctx, from, to);
    }
    if (c1_cmd->parsed()) return cmd_conjecture1(ctx, m_max);
    if (c2_cmd->parsed()) {
      search.non_increasing = !all_arrangements;
      return cmd_conjecture2(ctx, search, no_prune_justification);
    }
    if (bounds_cmd->parsed()) return cmd_bounds(ctx, bounds_m);
    if (pp_cmd->parsed()) return cmd_prime_powers(ctx, pp_limit);
    if (sub_cmd->parsed()) return cmd_substitute(ctx, sub_factors, sub_index, sub_prime);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::InputTooLarge ? kInputTooLarge : kUsage;
  }
}

}  // namespace robin::cli
