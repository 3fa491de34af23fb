#include "reldens/natural_density.hpp"

#include "reldens/parallel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace reldens {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool block_member(std::uint64_t k) {
  if (k < 3) return false;
  // k lies in (2^(e-1), 2^e] with e = bit_width(k - 1); a_k = 1 iff e is even.
  return std::bit_width(k - 1) % 2 == 0;
}

void validate(const IntegerSetSpec::Variant& v) {
  std::visit(overloaded{
                 [](const ArithmeticProgression& ap) {
                   if (ap.modulus == 0) throw std::invalid_argument("progression modulus must be >= 1");
                   if (ap.residue == 0 || ap.residue > ap.modulus)
                     throw std::invalid_argument("progression residue must lie in 1..modulus");
                 },
                 [](const BinaryDigitSet& b) {
                   if (b.digit == 0 || b.digit > 63) throw std::invalid_argument("binary digit index must lie in 1..63");
                 },
                 [](const EventuallyPeriodic& p) {
                   if (p.pattern.empty()) throw std::invalid_argument("periodic pattern must be non-empty");
                   if (p.head.size() > p.offset) throw std::invalid_argument("periodic head longer than offset");
                 },
                 [](const BlockExample&) {},
                 [](const Predicate& p) {
                   if (!p.member) throw std::invalid_argument("predicate without membership function");
                 },
                 [](const Intersection& i) {
                   if (i.parts.empty()) throw std::invalid_argument("empty intersection");
                 },
                 [](const Complement& c) {
                   if (!c.base) throw std::invalid_argument("complement of nothing");
                 },
             },
             v);
}

}  // namespace

IntegerSetSpec::IntegerSetSpec(Variant v) : v_(std::move(v)) { validate(v_); }

IntegerSetSpec IntegerSetSpec::progression(std::uint64_t modulus, std::uint64_t residue) {
  return IntegerSetSpec(ArithmeticProgression{modulus, residue});
}
IntegerSetSpec IntegerSetSpec::binary_digit(unsigned digit) { return IntegerSetSpec(BinaryDigitSet{digit}); }
IntegerSetSpec IntegerSetSpec::periodic(std::uint64_t offset, std::vector<bool> pattern, std::vector<bool> head) {
  return IntegerSetSpec(EventuallyPeriodic{offset, std::move(pattern), std::move(head)});
}
IntegerSetSpec IntegerSetSpec::block_example() { return IntegerSetSpec(BlockExample{}); }
IntegerSetSpec IntegerSetSpec::predicate(std::function<bool(std::uint64_t)> member, std::string label) {
  return IntegerSetSpec(Predicate{std::move(member), std::move(label)});
}
IntegerSetSpec IntegerSetSpec::intersection(std::vector<IntegerSetSpec> parts) {
  return IntegerSetSpec(Intersection{std::move(parts)});
}
IntegerSetSpec IntegerSetSpec::complement(IntegerSetSpec base) {
  return IntegerSetSpec(Complement{std::make_shared<const IntegerSetSpec>(std::move(base))});
}

bool IntegerSetSpec::contains(std::uint64_t n) const {
  if (n == 0) return false;
  return std::visit(overloaded{
                        [n](const ArithmeticProgression& ap) {
                          return n >= ap.residue && (n - ap.residue) % ap.modulus == 0;
                        },
                        [n](const BinaryDigitSet& b) { return ((n >> (b.digit - 1)) & 1u) != 0; },
                        [n](const EventuallyPeriodic& p) {
                          if (n <= p.offset) return n - 1 < p.head.size() && p.head[n - 1];
                          return static_cast<bool>(p.pattern[(n - p.offset - 1) % p.pattern.size()]);
                        },
                        [n](const BlockExample&) { return block_member(n); },
                        [n](const Predicate& p) { return p.member(n); },
                        [n](const Intersection& i) {
                          return std::all_of(i.parts.begin(), i.parts.end(),
                                             [n](const IntegerSetSpec& s) { return s.contains(n); });
                        },
                        [n](const Complement& c) { return !c.base->contains(n); },
                    },
                    v_);
}

bool IntegerSetSpec::is_symbolic() const {
  return std::visit(overloaded{
                        [](const BlockExample&) { return false; },
                        [](const Predicate&) { return false; },
                        [](const Intersection& i) {
                          return std::all_of(i.parts.begin(), i.parts.end(),
                                             [](const IntegerSetSpec& s) { return s.is_symbolic(); });
                        },
                        [](const Complement& c) { return c.base->is_symbolic(); },
                        [](const auto&) { return true; },
                    },
                    v_);
}

std::string IntegerSetSpec::describe() const {
  return std::visit(
      overloaded{
          [](const ArithmeticProgression& ap) {
            return "A(" + std::to_string(ap.modulus) + "," + std::to_string(ap.residue) + ")";
          },
          [](const BinaryDigitSet& b) { return "B(" + std::to_string(b.digit) + ")"; },
          [](const EventuallyPeriodic& p) {
            std::string bits;
            for (bool b : p.pattern) bits += b ? '1' : '0';
            return "periodic(offset=" + std::to_string(p.offset) + ",pattern=" + bits + ")";
          },
          [](const BlockExample&) { return std::string("block-example"); },
          [](const Predicate& p) { return p.label; },
          [](const Intersection& i) {
            std::string out = "intersection(";
            for (std::size_t k = 0; k < i.parts.size(); ++k) out += (k ? "," : "") + i.parts[k].describe();
            return out + ")";
          },
          [](const Complement& c) { return "complement(" + c.base->describe() + ")"; },
      },
      v_);
}

std::optional<PeriodicForm> periodic_form(const IntegerSetSpec& spec, std::uint64_t max_period) {
  const auto& v = spec.variant();
  std::optional<PeriodicForm> out;
  if (auto ap = std::get_if<ArithmeticProgression>(&v)) {
    out = PeriodicForm{ap->modulus, 0};
  } else if (auto b = std::get_if<BinaryDigitSet>(&v)) {
    out = PeriodicForm{std::uint64_t{1} << b->digit, 0};
  } else if (auto p = std::get_if<EventuallyPeriodic>(&v)) {
    out = PeriodicForm{p->pattern.size(), p->offset};
  } else if (auto c = std::get_if<Complement>(&v)) {
    out = periodic_form(*c->base, max_period);
  } else if (auto i = std::get_if<Intersection>(&v)) {
    PeriodicForm joint;
    for (const auto& part : i->parts) {
      const auto f = periodic_form(part, max_period);
      if (!f) return std::nullopt;
      const auto g = std::gcd(joint.period, f->period);
      if (joint.period / g > max_period / f->period) throw std::invalid_argument("joint period too large");
      joint.period = joint.period / g * f->period;
      joint.offset = std::max(joint.offset, f->offset);
    }
    out = joint;
  }
  if (out && out->period > max_period) throw std::invalid_argument("joint period too large");
  return out;
}

Rational density_exact(const IntegerSetSpec& spec) {
  const auto& v = spec.variant();
  if (auto ap = std::get_if<ArithmeticProgression>(&v)) return Rational(1, ap->modulus);
  if (std::holds_alternative<BinaryDigitSet>(v)) return Rational(1, 2);
  if (auto c = std::get_if<Complement>(&v)) return Rational(1) - density_exact(*c->base);
  if (auto p = std::get_if<EventuallyPeriodic>(&v)) {
    const auto ones = std::count(p->pattern.begin(), p->pattern.end(), true);
    return Rational(ones, p->pattern.size());
  }
  const auto form = periodic_form(spec);
  if (!form) throw std::invalid_argument("no exact density");
  const auto counted = reduce_chunks(
      form->offset + 1, form->offset + form->period + 1, kScanChunk, std::uint64_t{0},
      [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& acc) {
        for (std::uint64_t n = lo; n < hi; ++n) acc += spec.contains(n);
      },
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  return Rational(counted, form->period);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactKnown: return "ExactKnown";
    case Verdict::Converged: return "Converged";
    case Verdict::Oscillating: return "Oscillating";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

// Partial densities along `checkpoints` plus oscillation probes, with the
// shared verdict rule.
DensityEstimate judge(std::vector<std::pair<double, double>> checkpoints, const std::vector<double>& probe_values,
                      DensityOptions options) {
  DensityEstimate est;
  est.checkpoints = std::move(checkpoints);
  est.liminf_probe = *std::min_element(probe_values.begin(), probe_values.end());
  est.limsup_probe = *std::max_element(probe_values.begin(), probe_values.end());
  const auto& cp = est.checkpoints;
  if (cp.size() >= 3) {
    const double a = cp[cp.size() - 1].second, b = cp[cp.size() - 2].second, c = cp[cp.size() - 3].second;
    if (std::abs(a - b) < options.tol && std::abs(a - c) < options.tol && std::abs(b - c) < options.tol) {
      est.verdict = Verdict::Converged;
      est.value = a;
      return est;
    }
  }
  est.verdict = est.limsup_probe - est.liminf_probe > 10.0 * options.tol ? Verdict::Oscillating : Verdict::Inconclusive;
  return est;
}

// Checkpoints plus powers of two, and the subset used for the liminf/limsup probes.
struct ProbePlan {
  std::vector<std::uint64_t> checkpoints;
  std::vector<std::uint64_t> all;
  std::uint64_t upper_from = 1;
};

ProbePlan plan_probes(std::uint64_t n_max, std::size_t checkpoint_count) {
  ProbePlan plan;
  plan.checkpoints = geometric_checkpoints(n_max, checkpoint_count);
  plan.all = plan.checkpoints;
  for (std::uint64_t p = 1; p <= n_max && p != 0; p <<= 1) plan.all.push_back(p);
  std::sort(plan.all.begin(), plan.all.end());
  plan.all.erase(std::unique(plan.all.begin(), plan.all.end()), plan.all.end());
  plan.upper_from = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n_max))));
  return plan;
}

template <class Member>
DensityEstimate stream_density(std::uint64_t n_max, std::size_t checkpoint_count, DensityOptions options,
                               double unit, Member member) {
  const auto plan = plan_probes(n_max, checkpoint_count);
  const auto scan = prefix_scan<Count>(n_max, plan.all, [&](Count& c, std::uint64_t n) { c.value += member(n); });
  std::vector<std::pair<double, double>> checkpoints;
  std::vector<double> probes;
  for (std::size_t i = 0; i < plan.all.size(); ++i) {
    const auto n = plan.all[i];
    const double d = static_cast<double>(scan.at_probes[i].value) / static_cast<double>(n);
    if (std::binary_search(plan.checkpoints.begin(), plan.checkpoints.end(), n))
      checkpoints.emplace_back(static_cast<double>(n) * unit, d);
    if (n >= plan.upper_from) probes.push_back(d);
  }
  return judge(std::move(checkpoints), probes, options);
}

}  // namespace

DensityEstimate density_estimate(const IntegerSetSpec& spec, std::uint64_t n_max, std::size_t checkpoint_count,
                                 DensityOptions options) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  if (checkpoint_count < 2) throw std::invalid_argument("checkpoint_count must be >= 2");
  if (n_max > (std::uint64_t{1} << 62)) throw std::overflow_error("n_max overflows the scan index");
  return stream_density(n_max, checkpoint_count, options, 1.0, [&](std::uint64_t n) { return spec.contains(n); });
}

DensityEstimate exact_estimate(const IntegerSetSpec& spec) {
  DensityEstimate est;
  const double d = to_double(density_exact(spec));
  est.value = d;
  est.limsup_probe = est.liminf_probe = d;
  est.verdict = Verdict::ExactKnown;
  return est;
}

ProbeRange oscillation_probe(const IntegerSetSpec& spec, std::span<const unsigned> probe_exponents) {
  if (probe_exponents.size() < 4) throw std::invalid_argument("insufficient probes");
  if (!std::is_sorted(probe_exponents.begin(), probe_exponents.end()) ||
      std::adjacent_find(probe_exponents.begin(), probe_exponents.end()) != probe_exponents.end())
    throw std::invalid_argument("probe exponents must be increasing");
  if (probe_exponents.back() > 62) throw std::overflow_error("probe exponent too large");
  std::vector<std::uint64_t> probes;
  for (unsigned e : probe_exponents) probes.push_back(std::uint64_t{1} << e);
  const auto scan =
      prefix_scan<Count>(probes.back(), probes, [&](Count& c, std::uint64_t n) { c.value += spec.contains(n); });
  ProbeRange range{1.0, 0.0};
  for (std::size_t i = probes.size() / 2; i < probes.size(); ++i) {
    const double d = static_cast<double>(scan.at_probes[i].value) / static_cast<double>(probes[i]);
    range.liminf = std::min(range.liminf, d);
    range.limsup = std::max(range.limsup, d);
  }
  return range;
}

DensityEstimate continuous_density(const std::function<bool(double)>& indicator, double t_max, double step,
                                   DensityOptions options, std::size_t checkpoint_count) {
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (!(step > 0.0) || step > t_max / 100.0) throw std::invalid_argument("step must lie in (0, t_max/100]");
  const auto cells = static_cast<std::uint64_t>(std::floor(t_max / step));
  return stream_density(cells, checkpoint_count, options, step, [&](std::uint64_t i) {
    return indicator((static_cast<double>(i) - 0.5) * step);
  });
}

NoMeasureReport no_measure_witness(std::uint64_t prime_bound) {
  if (prime_bound < 2) throw std::invalid_argument("prime_bound must be >= 2");
  NoMeasureReport report;
  for (std::uint64_t p = 2; p <= prime_bound; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
    if (!prime) continue;
    ResidueClassCheck check;
    check.prime = p;
    for (std::uint64_t k = 1; k <= p; ++k) {
      check.densities.push_back(density_exact(IntegerSetSpec::progression(p, k)));
      check.total += check.densities.back();
    }
    check.all_equal = std::all_of(check.densities.begin(), check.densities.end(),
                                  [&](const Rational& d) { return d == check.densities.front(); });
    report.singleton_bound = check.densities.front();
    report.primes.push_back(std::move(check));
  }
  // {m} is eventually periodic (zero pattern past m), density 0 for every m.
  const std::uint64_t m = prime_bound;
  std::vector<bool> head(m, false);
  head[m - 1] = true;
  report.singleton_density = density_exact(IntegerSetSpec::periodic(m, {false}, std::move(head)));
  report.whole_density = density_exact(IntegerSetSpec::progression(1, 1));
  report.sigma_additivity_fails = report.singleton_density == 0 && report.whole_density == 1;
  return report;
}

}  // namespace reldens
