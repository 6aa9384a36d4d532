#include "lexlat/local.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lexlat {

std::vector<LocalIdeal> local_ideals(const ForestPoset& p) {
  std::vector<LocalIdeal> out;
  out.reserve(static_cast<size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    int base[] = {x};
    UpperSet handle = up_closure(p, base);
    std::vector<int> strict;
    for (int m : handle.members())
      if (m != x) strict.push_back(m);
    out.push_back(
        {x, handle, LexElement::unit(p, x), UpperSet(p, std::move(strict))});
  }
  return out;
}

ProjectionTable::ProjectionTable(const ForestPoset& p) : host_(&p) {
  masks_.reserve(static_cast<size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    int base[] = {x};
    masks_.push_back(up_closure(p, base));
  }
}

LexElement ProjectionTable::apply(int x, const LexElement& f) const {
  require(f.host_ptr() == host_, Err::PosetMismatch, "element on a different poset");
  return mask(f, mask_of(x));
}

LexElement local_projection(int x, const LexElement& f) {
  require(x >= 0 && x < f.host().size(), Err::UnknownElement, "index out of range");
  int base[] = {x};
  return mask_up(f, base);
}

LexElement cut(int x, const LexElement& f) { return f - local_projection(x, f); }

Rat coordinate_functional(int x, const LexElement& f) {
  require(x >= 0 && x < f.host().size(), Err::UnknownElement, "index out of range");
  return f.coeff(x);
}

std::vector<std::pair<LocalIdeal, LexElement>> decompose_principal(const LexElement& f) {
  require(!f.is_zero(), Err::ZeroElement, "decompose_principal of the zero element");
  const ForestPoset& p = f.host();
  SignSplit split = min_support(f);
  std::vector<int> m;
  std::merge(split.plus.begin(), split.plus.end(), split.minus.begin(), split.minus.end(),
             std::back_inserter(m));
  std::vector<std::pair<LocalIdeal, LexElement>> out;
  for (int x : m) {
    int base[] = {x};
    UpperSet handle = up_closure(p, base);
    std::vector<int> strict;
    for (int y : handle.members())
      if (y != x) strict.push_back(y);
    LocalIdeal local{x, handle, LexElement::unit(p, x), UpperSet(p, std::move(strict))};
    out.emplace_back(std::move(local), mask_up(f, base));
  }
  return out;
}

namespace {

LexElement random_element(const ForestPoset& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<std::pair<int, Rat>> coeffs;
  for (int x = 0; x < p.size(); ++x) {
    if (pick(rng) == 0) continue;
    int n = num(rng);
    if (n == 0) n = 1;
    coeffs.emplace_back(x, Rat(n, den(rng)));
  }
  return LexElement::from_coeffs(p, std::move(coeffs));
}

std::string counterexample(const LexElement& f, const LexElement& lhs, const LexElement& rhs) {
  std::ostringstream out;
  out << "{\"f\": \"" << to_string(f) << "\", \"lhs\": \"" << to_string(lhs) << "\", \"rhs\": \""
      << to_string(rhs) << "\"}";
  return out.str();
}

struct PairTask {
  int x;
  int y;
  int axiom;
};

CompatLine check_axiom(const ForestPoset& p, const ProjectionTable& table, const PairTask& task,
                       int random_per_pair, std::uint64_t seed) {
  CompatLine line{task.x, task.y, task.axiom, true, ""};
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(task.x) * 1000003u +
                              static_cast<std::uint64_t>(task.y) * 10007u + task.axiom));
  std::vector<LexElement> tests;
  for (int e = 0; e < p.size(); ++e) tests.push_back(LexElement::unit(p, e));
  for (int r = 0; r < random_per_pair; ++r) tests.push_back(random_element(p, rng));

  auto record_fail = [&](const LexElement& f, const LexElement& lhs, const LexElement& rhs) {
    line.pass = false;
    line.counterexample_json = counterexample(f, lhs, rhs);
  };

  switch (task.axiom) {
    case 1: {
      // Q_x(E) = E(up x) and Q_x^2 = Q_x
      const UpperSet& m = table.mask_of(task.x);
      for (int y : m.members()) {
        LexElement e = LexElement::unit(p, y);
        LexElement q = table.apply(task.x, e);
        if (q != e) return record_fail(e, q, e), line;
      }
      for (const LexElement& f : tests) {
        LexElement q = table.apply(task.x, f);
        if (!ideal_membership(q, m)) return record_fail(f, q, q), line;
        LexElement qq = table.apply(task.x, q);
        if (qq != q) return record_fail(f, qq, q), line;
      }
      break;
    }
    case 2: {
      // disjoint: Q_x Q_y = Q_y Q_x = 0
      LexElement zero(p);
      for (const LexElement& f : tests) {
        LexElement a = table.apply(task.x, table.apply(task.y, f));
        if (!a.is_zero()) return record_fail(f, a, zero), line;
        LexElement b = table.apply(task.y, table.apply(task.x, f));
        if (!b.is_zero()) return record_fail(f, b, zero), line;
      }
      break;
    }
    case 3: {
      // nested up(x) strictly inside up(y): Q_x Q_y = Q_y Q_x = Q_x, Q_x e_y = 0
      LexElement ey = LexElement::unit(p, task.y);
      LexElement qey = table.apply(task.x, ey);
      if (!qey.is_zero()) return record_fail(ey, qey, LexElement(p)), line;
      for (const LexElement& f : tests) {
        LexElement qx = table.apply(task.x, f);
        LexElement a = table.apply(task.x, table.apply(task.y, f));
        if (a != qx) return record_fail(f, a, qx), line;
        LexElement b = table.apply(task.y, qx);
        if (b != qx) return record_fail(f, b, qx), line;
      }
      break;
    }
    default:
      break;
  }
  return line;
}

std::vector<PairTask> build_tasks(const ForestPoset& p) {
  std::vector<PairTask> tasks;
  for (int x = 0; x < p.size(); ++x) tasks.push_back({x, x, 1});
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y) {
      if (!p.comparable(x, y)) {
        tasks.push_back({x, y, 2});
      } else {
        // up(a) strictly inside up(b) iff b < a
        int small = p.strictly_less(x, y) ? y : x;
        int big = small == x ? y : x;
        tasks.push_back({small, big, 3});
      }
    }
  std::sort(tasks.begin(), tasks.end(), [](const PairTask& a, const PairTask& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.axiom < b.axiom;
  });
  return tasks;
}

CompatReport run_verify(const ForestPoset& p, int random_per_pair, std::uint64_t seed,
                        bool parallel) {
  ProjectionTable table(p);
  auto tasks = build_tasks(p);
  CompatReport report;
  report.lines.resize(tasks.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i)
      report.lines[static_cast<size_t>(i)] =
          check_axiom(p, table, tasks[static_cast<size_t>(i)], random_per_pair, seed);
  } else {
    for (size_t i = 0; i < tasks.size(); ++i)
      report.lines[i] = check_axiom(p, table, tasks[i], random_per_pair, seed);
  }
  for (const auto& line : report.lines) report.all_pass = report.all_pass && line.pass;
  return report;
}

}  // namespace

std::string CompatReport::to_text(const ForestPoset& p) const {
  std::ostringstream out;
  for (const auto& line : lines) {
    out << "PAIR (" << p.id_of(line.x) << "," << p.id_of(line.y) << ") AXIOM " << line.axiom << " "
        << (line.pass ? "PASS" : "FAIL");
    if (!line.pass) out << " " << line.counterexample_json;
    out << "\n";
  }
  return out.str();
}

CompatReport verify_compatibility_serial(const ForestPoset& p, int random_per_pair,
                                         std::uint64_t seed) {
  return run_verify(p, random_per_pair, seed, false);
}

CompatReport verify_compatibility_parallel(const ForestPoset& p, int random_per_pair,
                                           std::uint64_t seed) {
  return run_verify(p, random_per_pair, seed, true);
}

CompatReport verify_compatibility(const ForestPoset& p, int random_per_pair, std::uint64_t seed) {
  return run_verify(p, random_per_pair, seed, p.size() >= 8);
}

}  // namespace lexlat
