#include "thickening/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "thickening/closed_forms.hpp"
#include "thickening/filtration.hpp"
#include "thickening/json.hpp"
#include "thickening/schur.hpp"

namespace thickening::report {
namespace {

constexpr std::size_t kFailureSample = 5;

// Accumulates case outcomes for one named check.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::string& label) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    if (result_.first_failures.size() < kFailureSample) result_.first_failures.push_back(label);
  }

  // Runs `ok(i)` for i in [0, count) in parallel; folds outcomes in index order.
  template <typename Pred, typename Label>
  void record_all(std::size_t count, Pred ok, Label label) {
    const auto outcomes = detail::parallel_map(count, [&](std::size_t i) { return ok(i) ? 1 : 0; });
    for (std::size_t i = 0; i < count; ++i) record(outcomes[i] == 1, label(i));
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

struct Cell {
  std::int64_t m;
  std::int64_t t;
};

std::vector<Cell> grid(std::int64_t m_lo, std::int64_t m_hi, std::int64_t t_lo, std::int64_t t_hi) {
  std::vector<Cell> out;
  for (std::int64_t m = m_lo; m <= m_hi; ++m)
    for (std::int64_t t = t_lo; t <= t_hi; ++t) out.push_back({m, t});
  return out;
}

std::string cell_label(const Cell& c) {
  return "m=" + std::to_string(c.m) + " t=" + std::to_string(c.t);
}

std::vector<CheckResult> schur_suite(const VerifyBounds& b) {
  const std::int64_t max_n = b.max_m.value_or(6);
  const std::int64_t max_size = 8;
  std::vector<Partition> shapes;
  for (std::int64_t k = 0; k <= max_size; ++k)
    for (Partition& p : partitions_of(k, 4)) shapes.push_back(std::move(p));

  struct Case {
    Partition shape;
    std::size_t n;
  };
  std::vector<Case> cases;
  for (const Partition& p : shapes)
    for (std::int64_t n = 1; n <= max_n; ++n) cases.push_back({p, static_cast<std::size_t>(n)});
  auto label = [&](std::size_t i) { return cases[i].shape.to_string() + " N=" + std::to_string(cases[i].n); };

  std::vector<CheckResult> out;
  Check oracle("schur.weyl_dim_equals_ssyt_count");
  oracle.record_all(cases.size(),
                    [&](std::size_t i) { return weyl_dim(cases[i].shape, cases[i].n) == ssyt_count(cases[i].shape, cases[i].n); },
                    label);
  out.push_back(oracle.take());

  Check shift("schur.shift_invariance");
  shift.record_all(
      cases.size(),
      [&](std::size_t i) {
        const Case& c = cases[i];
        if (c.shape.length() > c.n) return true;
        const DominantWeight w(c.shape.padded(c.n));
        const BigInt base = weyl_dim(w, c.n);
        for (std::int64_t s = -3; s <= 3; ++s)
          if (weyl_dim(w.shifted(s), c.n) != base) return false;
        return true;
      },
      label);
  out.push_back(shift.take());

  Check sym("schur.symmetric_power");
  Check ext("schur.exterior_power");
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 0; k <= max_size; ++k) {
      const auto label_nk = "N=" + std::to_string(n) + " k=" + std::to_string(k);
      const Partition row = k == 0 ? Partition{} : Partition{k};
      sym.record(weyl_dim(row, static_cast<std::size_t>(n)) == binom(n + k - 1, k), label_nk);
      const Partition column(std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
      ext.record(weyl_dim(column, static_cast<std::size_t>(n)) == binom(n, k), label_nk);
    }
  }
  out.push_back(sym.take());
  out.push_back(ext.take());
  return out;
}

std::vector<CheckResult> zset_suite(const VerifyBounds& b) {
  const std::int64_t max_t = b.max_t.value_or(20);
  std::vector<CheckResult> out;

  Check characterization("zset.characterization");
  Check level("zset.level_is_one");
  for (std::int64_t t = 1; t <= max_t; ++t) {
    const auto got = enumerate_Z(2, 2, t);
    std::vector<ZIndexEntry> expected;
    for (std::int64_t z = 0; z <= t - 1; ++z) expected.push_back({Partition{z, z}, 1});
    const auto label = "t=" + std::to_string(t);
    characterization.record(std::set(got.begin(), got.end()) == std::set(expected.begin(), expected.end()), label);
    bool all_one = true;
    for (const auto& e : got) all_one = all_one && e.l == 1;
    level.record(all_one, label);
  }
  out.push_back(characterization.take());
  out.push_back(level.take());

  Check wsize("zset.w_set_size");
  const std::int64_t max_m = b.max_m.value_or(8);
  for (std::int64_t m = 3; m <= max_m; ++m)
    for (std::int64_t z = 0; z <= 15; ++z)
      wsize.record(enumerate_W(z, m).size() == static_cast<std::size_t>(z),
                   "m=" + std::to_string(m) + " z=" + std::to_string(z));
  out.push_back(wsize.take());
  return out;
}

std::vector<CheckResult> decomposition_suite(const VerifyBounds& b) {
  const auto cells = grid(3, b.max_m.value_or(8), 1, b.max_t.value_or(12));
  auto label = [&](std::size_t i) { return cell_label(cells[i]); };
  std::vector<CheckResult> out;

  Check layer("decomposition.layer_equals_closed_form");
  layer.record_all(cells.size(),
                   [&](std::size_t i) {
                     return layer_length_via_decomposition(cells[i].m, cells[i].t) ==
                            layer_length_closed(cells[i].m, cells[i].t);
                   },
                   label);
  out.push_back(layer.take());

  Check per_term("decomposition.summand_dims");
  per_term.record_all(cells.size(),
                      [&](std::size_t i) {
                        for (const auto& s : layer_summands(cells[i].m, cells[i].t)) {
                          if (s.dim != layer_summand_dim_closed(cells[i].m, cells[i].t, s.epsilon)) return false;
                          if (weyl_dim(s.lambda, 2) != s.epsilon + 1) return false;
                        }
                        return true;
                      },
                      label);
  out.push_back(per_term.take());

  Check cumulative("decomposition.cumulative_equals_theorem");
  cumulative.record_all(cells.size(),
                        [&](std::size_t i) {
                          return cumulative_length_via_decomposition(cells[i].m, cells[i].t) ==
                                 cumulative_length(cells[i].m, cells[i].t);
                        },
                        label);
  out.push_back(cumulative.take());
  return out;
}

std::vector<CheckResult> identities_suite(const VerifyBounds& b) {
  std::vector<CheckResult> out;
  const std::int64_t max_b = b.max_b.value_or(40);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t bb = 0; bb <= max_b; ++bb)
    for (std::int64_t a = 0; a <= bb; ++a) pairs.emplace_back(a, bb);
  Check sum("identities.weighted_binomial_sum");
  sum.record_all(pairs.size(), [&](std::size_t i) { return identity_sum_check(pairs[i].first, pairs[i].second); },
                 [&](std::size_t i) {
                   return "a=" + std::to_string(pairs[i].first) + " b=" + std::to_string(pairs[i].second);
                 });
  out.push_back(sum.take());

  const auto cells = grid(3, b.max_m.value_or(10), 1, b.max_t.value_or(30));
  auto label = [&](std::size_t i) { return cell_label(cells[i]); };
  Check telescoping("identities.layers_sum_to_cumulative");
  telescoping.record_all(cells.size(), [&](std::size_t i) { return cumulative_identity_check(cells[i].m, cells[i].t); },
                         label);
  out.push_back(telescoping.take());

  Check monotone("identities.cumulative_increasing");
  monotone.record_all(cells.size(),
                      [&](std::size_t i) {
                        const auto [m, t] = cells[i];
                        return t < 2 || cumulative_length(m, t + 1) > cumulative_length(m, t);
                      },
                      label);
  out.push_back(monotone.take());
  return out;
}

std::vector<CheckResult> catalan_suite(const VerifyBounds& b) {
  const std::int64_t max_m = b.max_m.value_or(20);
  std::vector<CheckResult> out;
  Check corollary("catalan.factorial_times_epsilon3");
  for (std::int64_t m = 3; m <= max_m; ++m) {
    corollary.record(ExactRatio(factorial(2 * m)) * epsilon3(m) == ExactRatio(catalan(m)),
                     "m=" + std::to_string(m));
  }
  out.push_back(corollary.take());

  // Segner recurrence C_{k+1} = sum_i C_i C_{k-i}, seeded with C_0 = 1.
  Check recurrence("catalan.segner_recurrence");
  std::vector<BigInt> seq{1};
  for (std::int64_t k = 0; k < max_m; ++k) {
    BigInt next = 0;
    for (std::int64_t i = 0; i <= k; ++i) next += seq[static_cast<std::size_t>(i)] * seq[static_cast<std::size_t>(k - i)];
    seq.push_back(next);
    recurrence.record(next == catalan(k + 1), "m=" + std::to_string(k + 1));
  }
  out.push_back(recurrence.take());
  return out;
}

}  // namespace

std::vector<TableRow> table_rows(std::int64_t m_min, std::int64_t m_max, std::int64_t t_min,
                                 std::int64_t t_max) {
  if (m_min > m_max || t_min > t_max) throw std::invalid_argument("empty range");
  if (m_min < 3) throw std::invalid_argument("need m >= 3");
  if (t_min < 1) throw std::invalid_argument("need t >= 1");
  const auto cells = grid(m_min, m_max, t_min, t_max);
  return detail::parallel_map(cells.size(), [&](std::size_t i) {
    const auto [m, t] = cells[i];
    return TableRow{m, t, layer_length_closed(m, t), cumulative_length(m, t)};
  });
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::string out = "m,t,layer,cumulative\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + ',' + std::to_string(r.t) + ',' + r.layer.str() + ',' + r.cumulative.str() + '\n';
  }
  return out;
}

std::string render_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["m"] = r.m;
    row["t"] = r.t;
    row["layer"] = r.layer.str();
    row["cumulative"] = r.cumulative.str();
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::vector<TableRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "m,t,layer,cumulative") throw std::runtime_error("missing CSV header");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string f; std::getline(cells, f, ',');) fields.push_back(f);
    if (fields.size() != 4) throw std::runtime_error("bad CSV row: " + line);
    try {
      rows.push_back({std::stoll(fields[0]), std::stoll(fields[1]), BigInt(fields[2]), BigInt(fields[3])});
    } catch (const std::exception&) {
      throw std::runtime_error("bad CSV row: " + line);
    }
  }
  return rows;
}

std::string render_decomposition_text(std::int64_t m, std::int64_t t) {
  std::ostringstream os;
  BigInt total = 0;
  for (const auto& s : layer_summands(m, t)) {
    os << "epsilon=" << s.epsilon << " lambda=" << s.lambda << " lambda_s=" << s.lambda_s << " dim=" << s.dim
       << '\n';
    total += s.dim;
  }
  const BigInt closed = layer_length_closed(m, t);
  os << "total=" << total << " closed_form=" << closed << ' ' << (total == closed ? "match" : "MISMATCH") << '\n';
  return os.str();
}

std::string render_decomposition_json(std::int64_t m, std::int64_t t) {
  nlohmann::ordered_json doc;
  doc["m"] = m;
  doc["t"] = t;
  doc["summands"] = nlohmann::ordered_json::array();
  BigInt total = 0;
  for (const auto& s : layer_summands(m, t)) {
    doc["summands"].push_back(s);
    total += s.dim;
  }
  const BigInt closed = layer_length_closed(m, t);
  doc["total"] = total.str();
  doc["closed_form"] = closed.str();
  doc["match"] = total == closed;
  return doc.dump(2) + "\n";
}

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "schur") return Suite::Schur;
  if (name == "zset") return Suite::Zset;
  if (name == "decomposition") return Suite::Decomposition;
  if (name == "identities") return Suite::Identities;
  if (name == "catalan") return Suite::Catalan;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyBounds& bounds) {
  auto append = [](std::vector<CheckResult>& to, std::vector<CheckResult> from) {
    for (auto& c : from) to.push_back(std::move(c));
  };
  std::vector<CheckResult> out;
  if (suite == Suite::Schur || suite == Suite::All) append(out, schur_suite(bounds));
  if (suite == Suite::Zset || suite == Suite::All) append(out, zset_suite(bounds));
  if (suite == Suite::Decomposition || suite == Suite::All) append(out, decomposition_suite(bounds));
  if (suite == Suite::Identities || suite == Suite::All) append(out, identities_suite(bounds));
  if (suite == Suite::Catalan || suite == Suite::All) append(out, catalan_suite(bounds));
  return out;
}

std::string render_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.cases << " cases, " << c.failures
       << " failures\n";
    for (const auto& f : c.first_failures) os << "  failed at " << f << '\n';
  }
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.failures != 0) return false;
  return true;
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

}  // namespace thickening::report
