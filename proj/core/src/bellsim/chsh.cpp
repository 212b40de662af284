#include "invset/bellsim/chsh.hpp"

#include <future>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <json.hpp>

#include "invset/errors.hpp"

namespace invset::bellsim {

namespace mp = boost::multiprecision;
using Dec = mp::number<mp::cpp_dec_float<60>>;

const std::string& tsirelson_decimal() {
  static const std::string value = Dec(mp::sqrt(Dec(8))).str(40);
  return value;
}

std::string tsirelson_gap(const Rational& s, unsigned significant) {
  const Dec abs_s = mp::abs(Dec(s.num()) / Dec(s.den()));
  return Dec(mp::abs(abs_s - mp::sqrt(Dec(8)))).str(significant);
}

ChshReport chsh_value(const BellEnsemble& e) {
  ChshReport r;
  r.N = e.N;
  for (const auto c : ontology::kAllContexts) {
    const Rational total = e.context_weight(c);
    if (total.is_zero()) throw DomainError("context " + c.str() + " has zero total weight");
    Rational corr;
    Rational ma;
    Rational mb;
    for (const auto& atom : e.atoms) {
      const auto& o = atom.outcomes[c.index()];
      if (!o) continue;
      const Rational p = atom.weight / total;
      corr += Rational(o->a * o->b) * p;
      ma += Rational(o->a) * p;
      mb += Rational(o->b) * p;
    }
    r.correlations[c.index()] = corr;
    r.marginal_a[c.index()] = ma;
    r.marginal_b[c.index()] = mb;
  }
  r.S = r.correlations[0] + r.correlations[1] + r.correlations[2] - r.correlations[3];
  return r;
}

std::string to_json(const ChshReport& r) {
  using nlohmann::ordered_json;
  ordered_json corr = ordered_json::object();
  ordered_json marg = ordered_json::object();
  for (const auto c : ontology::kAllContexts) {
    corr[c.str()] = r.correlations[c.index()].str();
    marg[c.str()] = {{"A", r.marginal_a[c.index()].str()}, {"B", r.marginal_b[c.index()].str()}};
  }
  ordered_json doc = {
      {"N", r.N},
      {"S", r.S.str()},
      {"decimal", r.S.decimal(20)},
      {"abs_S_exceeds_2", r.S.abs() > Rational(2)},
      {"correlations", std::move(corr)},
      {"marginals", std::move(marg)},
      {"quantum_reference", r.quantum_reference},
  };
  return doc.dump();
}

std::vector<SweepRow> tsirelson_sweep(std::span<const std::uint64_t> Ns) {
  std::vector<std::future<SweepRow>> jobs;
  jobs.reserve(Ns.size());
  for (const auto N : Ns) {
    jobs.push_back(std::async(std::launch::async, [N] {
      const auto settings = auto_tsirelson_settings(N);
      const auto report = chsh_value(build_bell_ensemble(settings));
      SweepRow row;
      row.N = N;
      row.n = (settings.cosines[0] * Rational(static_cast<std::int64_t>(N))).num().convert_to<std::int64_t>();
      row.S = report.S;
      row.S_decimal = report.S.decimal(20);
      row.gap_to_tsirelson = tsirelson_gap(report.S);
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(jobs.size());
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::string to_csv(std::span<const SweepRow> rows) {
  std::ostringstream os;
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.N << ',' << r.n << ',' << r.S.num() << ',' << r.S.den() << ',' << r.S_decimal << ','
       << r.gap_to_tsirelson << '\n';
  }
  return os.str();
}

}  // namespace invset::bellsim
