// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/report.hpp"

#include <cstdio>
#include <sstream>

#include "consistat/errors.hpp"

namespace consistat {

namespace {

std::string fmt(const char* format, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string fmt_g(double v) { return fmt("%.6g", v); }

void render_outcome(std::ostringstream& out, const std::string& indent, const std::string& label,
                    const TestOutcome& o) {
  out << indent << label << " [" << to_string(o.test_id) << "]: statistic=" << fmt_g(o.statistic)
      << ", critical=" << fmt_g(o.decision.critical_value)
      << ", p=" << fmt_g(o.decision.p_value) << " -> "
      << (o.decision.reject ? "reject H0" : "accept H0") << "\n";
  for (const auto& w : o.warnings) {
    out << indent << "  note: " << w << "\n";
  }
}

}  // namespace

AnalysisReport run_analysis(const MeasurementDataset& ds, const AnalysisConfig& config) {
  config.validate();
  AnalysisReport report;
  report.alpha = config.alpha;
  report.dataset.n_records = ds.records().size();
  report.dataset.projects = ds.projects();
  report.dataset.methods = ds.methods();
  for (const auto& m : ds.methods()) {
    report.dataset.raters[m] = ds.raters(m);
  }

  std::vector<std::string> pairable;
  for (const auto& m : ds.methods()) {
    RaterInfluenceEntry entry;
    entry.method_id = m;
    if (ds.raters(m).size() != 2) {
      entry.skipped_reason = "pair-based analysis requires exactly 2 raters (found " +
                             std::to_string(ds.raters(m).size()) + ")";
      report.warnings.push_back("method " + m + ": " + entry.skipped_reason);
    } else {
      try {
        const auto pair = extract_pair(ds, m);
        std::vector<double> diffs(pair.first.size());
        for (std::size_t i = 0; i < diffs.size(); ++i) {
          diffs[i] = pair.first[i] - pair.second[i];
        }
        entry.outcome = rater_influence_test(diffs, config.alpha);
        pairable.push_back(m);
      } catch (const Error& e) {
        entry.skipped_reason = e.what();
        report.warnings.push_back("method " + m + ": " + entry.skipped_reason);
      }
    }
    report.rater_influence.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < pairable.size(); ++i) {
    for (std::size_t k = i + 1; k < pairable.size(); ++k) {
      const std::string& a = pairable[i];
      const std::string& b = pairable[k];

      InterraterEntry inter;
      inter.method_a = a;
      inter.method_b = b;
      try {
        inter.verdict = compare_methods_interrater(ds, a, b, config);
      } catch (const Error& e) {
        inter.verdict.kind = VerdictKind::Inconclusive;
        inter.verdict.diagnostics.push_back(e.what());
      }
      report.interrater.push_back(std::move(inter));

      InterMethodEntry between;
      between.method_a = a;
      between.method_b = b;
      try {
        const auto series = dab_series(ds, a, b);
        between.equality = intermethod_equality_test(series, config.alpha, config.lilliefors);
        if (between.equality->decision.reject) {
          auto calibration = fit_calibration_regression(ds, a, b, config);
          between.calibration = calibration.fit;
          between.calibration_note = calibration.reason;
        } else {
          between.calibration_note = "methods not significantly different; no calibration needed";
        }
      } catch (const Error& e) {
        between.skipped_reason = e.what();
      }
      report.intermethod.push_back(std::move(between));
    }
  }
  return report;
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "consistat analysis report (schema v" << report.schema_version << ")\n";
  out << "alpha: " << fmt_g(report.alpha) << "\n\n";

  out << "dataset: " << report.dataset.n_records << " records, " << report.dataset.projects.size()
      << " projects, " << report.dataset.methods.size() << " methods\n";
  for (const auto& m : report.dataset.methods) {
    out << "  method " << m << ": raters";
    const auto it = report.dataset.raters.find(m);
    if (it != report.dataset.raters.end()) {
      for (const auto& r : it->second) out << " " << r;
    }
    out << "\n";
  }
  out << "\n";

  out << "rater influence (per method)\n";
  for (const auto& e : report.rater_influence) {
    if (e.outcome) {
      render_outcome(out, "  ", "method " + e.method_id, *e.outcome);
    } else {
      out << "  method " << e.method_id << ": skipped (" << e.skipped_reason << ")\n";
    }
  }
  out << "\n";

  out << "inter-rater reliability (pairwise)\n";
  if (report.interrater.empty()) {
    out << "  no method pairs to compare\n";
  }
  for (const auto& e : report.interrater) {
    out << "  " << e.method_a << " vs " << e.method_b << ":\n";
    const auto& v = e.verdict;
    for (const auto& ev : v.evidence) {
      render_outcome(out, "    ", ev.label, ev.outcome);
    }
    if (v.gates.correlation) {
      out << "    independence gate: " << to_string(v.gates.correlation->coefficient_kind)
          << " r=" << fmt_g(v.gates.correlation->r)
          << ", p=" << fmt_g(v.gates.correlation->p_value) << " -> "
          << (v.gates.related ? "related" : "independent") << " samples\n";
    }
    for (const auto& w : v.warnings) out << "    warning: " << w << "\n";
    for (const auto& d : v.diagnostics) out << "    diagnostic: " << d << "\n";
    out << "    verdict: ";
    switch (v.kind) {
      case VerdictKind::MoreConsistent:
        out << "method " << (v.method ? *v.method : std::string("?")) << " is more consistent";
        break;
      case VerdictKind::NoDifference:
        out << "no detectable consistency difference";
        break;
      case VerdictKind::Inconclusive:
        out << "inconclusive";
        break;
    }
    if (v.branch_taken) out << " (branch " << to_string(*v.branch_taken) << ")";
    out << "\n";
  }
  out << "\n";

  out << "inter-method reliability (pairwise)\n";
  if (report.intermethod.empty()) {
    out << "  no method pairs to compare\n";
  }
  for (const auto& e : report.intermethod) {
    out << "  " << e.method_a << " vs " << e.method_b << ":\n";
    if (!e.skipped_reason.empty()) {
      out << "    skipped (" << e.skipped_reason << ")\n";
      continue;
    }
    if (e.equality) {
      render_outcome(out, "    ", "equality of measurements", *e.equality);
    }
    if (e.calibration) {
      out << "    calibration: " << e.method_b << " ~ " << fmt_g(e.calibration->slope) << "*"
          << e.method_a << " + " << fmt_g(e.calibration->intercept)
          << " (r^2 = " << fmt_g(e.calibration->r_squared)
          << ", residual sd = " << fmt_g(e.calibration->residual_sd) << ")\n";
    } else if (!e.calibration_note.empty()) {
      out << "    calibration: " << e.calibration_note << "\n";
    }
  }

  if (!report.warnings.empty()) {
    out << "\nwarnings\n";
    for (const auto& w : report.warnings) out << "  " << w << "\n";
  }
  return out.str();
}

}  // namespace consistat
