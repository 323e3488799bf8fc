#include "mopz/figure1.hpp"

#include "mopz/angelesco.hpp"

namespace mopz {

Figure1Result run_figure1(int sample_count) {
  if (sample_count < 2) throw DomainError("need at least two sample points");
  Figure1Result fig;
  const ParamSet outer_params{Real(-1) / 2, Real(1), Real(0), Real(-2)};
  const ParamSet inner_params{Real(1) / 2, Real(2), Real(1), Real(-2)};
  fig.outer = build_aj(5, outer_params);
  fig.inner = build_aj(4, inner_params);
  fig.outer_zeros = find_zeros(fig.outer, 5, 5, ZeroBounds{Real(-2), Real(1)});
  fig.inner_zeros = find_zeros(fig.inner, 4, 4, ZeroBounds{Real(-2), Real(1)});
  const OpenInterval neg{Real(-2), Real(0)}, pos{Real(0), Real(1)};
  fig.negative_verdict = check_interlacing(fig.inner_zeros.negative, fig.outer_zeros.negative, neg);
  fig.positive_verdict = check_interlacing(fig.inner_zeros.positive, fig.outer_zeros.positive, pos);
  fig.samples.reserve(static_cast<std::size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) {
    const Real x = Real(-2) + Real(3) * i / (sample_count - 1);
    fig.samples.push_back({x, eval_poly(fig.outer, x), eval_poly(fig.inner, x)});
  }
  return fig;
}

void write_figure1_csv(std::ostream& os, const Figure1Result& fig, const RunManifest& manifest) {
  os << "# mopz plot-fig1 v" << manifest.version << "\n";
  os << "# command: " << manifest.command_line << "\n";
  os << "# precision_bits: " << manifest.precision_bits << " timestamp: " << manifest.timestamp
     << "\n";
  os << "x,p5_half_integer,p4_raised\n";
  for (const auto& row : fig.samples)
    os << decimal_string(row[0]) << ',' << decimal_string(row[1]) << ',' << decimal_string(row[2])
       << "\n";
}

void write_figure1_gnuplot(std::ostream& os, const std::string& csv_path) {
  os << "set datafile separator ','\n"
     << "set xrange [-2:1]\n"
     << "set yrange [-1.5:1.5]\n"
     << "set xlabel 'x'\n"
     << "set grid\n"
     << "set key top left\n"
     << "plot '" << csv_path << "' using 1:2 skip 4 with lines dashtype 2 lw 2 "
     << "title 'P_5^{(-1/2,1,0)}(x;-2)', \\\n"
     << "     '" << csv_path << "' using 1:3 skip 4 with lines lw 3 "
     << "title 'P_4^{(1/2,2,1)}(x;-2)'\n";
}

namespace {

Json verdict_json(const InterlacingVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["pattern"] = v.pattern == InterlacingPattern::SameCount ? "same_count" : "count_minus_one";
  if (v.first_violation) {
    j["first_violation"] = Json{{"index", v.first_violation->first},
                                {"values",
                                 {decimal_string(v.first_violation->second.first),
                                  decimal_string(v.first_violation->second.second)}}};
  }
  return j;
}

}  // namespace

Json figure1_json(const Figure1Result& fig, const RunManifest& manifest) {
  Json j;
  j["manifest"] = to_json(manifest);
  j["outer"] = {{"family", family_name(fig.outer.family)},
                {"n", fig.outer.n},
                {"params", to_json(fig.outer.params)},
                {"coeffs", coeffs_json(fig.outer)},
                {"zeros", to_json(fig.outer_zeros)}};
  j["inner"] = {{"family", family_name(fig.inner.family)},
                {"n", fig.inner.n},
                {"params", to_json(fig.inner.params)},
                {"coeffs", coeffs_json(fig.inner)},
                {"zeros", to_json(fig.inner_zeros)}};
  j["interlacing_negative_side"] = verdict_json(fig.negative_verdict);
  j["interlacing_positive_side"] = verdict_json(fig.positive_verdict);
  return j;
}

}  // namespace mopz
