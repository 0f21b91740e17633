#include "sigmakit/homology.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

namespace sigmakit {

namespace {

struct RankData {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

RankData analyse(const SparseMatrix& m, const Budget& budget) {
  RankData out;
  const auto invariants = smith_invariants(m, budget);
  out.rank = invariants.size();
  for (const auto& d : invariants)
    if (d > 1)
      out.torsion.push_back(d);
  return out;
}

HomologyReport compute(const SimplicialComplex& complex, int max_degree, const Budget& budget,
                       bool reduced) {
  if (complex.empty())
    throw std::invalid_argument("homology of the empty complex is not defined here");
  const int dim = complex.dimension();
  const int top_degree = max_degree < 0 ? dim : max_degree;
  std::size_t entries = 0;
  for (int d = 0; d <= std::min(top_degree + 1, dim); ++d)
    entries += complex.faces(d).size() * static_cast<std::size_t>(d + 1);
  if (entries > budget.max_entries)
    throw BudgetExceeded("boundary matrices exceed the entry budget");
  const ChainComplex cc = chain_complex(complex, std::min(top_degree + 1, dim), reduced);

  // rank data for d_0 .. d_{top_degree+1}; missing matrices are zero maps
  std::vector<std::future<RankData>> jobs;
  for (int k = 0; k <= top_degree + 1; ++k) {
    if (k < static_cast<int>(cc.boundaries.size())) {
      const SparseMatrix* m = &cc.boundaries[static_cast<std::size_t>(k)];
      jobs.push_back(std::async(std::launch::async, [m, &budget] { return analyse(*m, budget); }));
    } else {
      std::promise<RankData> empty;
      empty.set_value({});
      jobs.push_back(empty.get_future());
    }
  }
  std::vector<RankData> ranks;
  for (auto& job : jobs)
    ranks.push_back(job.get());

  HomologyReport report;
  report.reduced = reduced;
  report.complete = top_degree >= dim;
  for (int k = 0; k <= top_degree; ++k) {
    const std::size_t chains =
        k < static_cast<int>(cc.ranks.size()) ? cc.ranks[static_cast<std::size_t>(k)] : 0;
    DegreeHomology h;
    h.degree = k;
    h.betti = chains - ranks[static_cast<std::size_t>(k)].rank -
              ranks[static_cast<std::size_t>(k + 1)].rank;
    h.torsion = ranks[static_cast<std::size_t>(k + 1)].torsion;
    report.degrees.push_back(std::move(h));
  }
  return report;
}

}  // namespace

bool ChainComplex::is_exact_composition() const {
  for (std::size_t k = 1; k < boundaries.size(); ++k)
    if (!sparse_product(boundaries[k - 1], boundaries[k]).entries.empty())
      return false;
  return true;
}

ChainComplex chain_complex(const SimplicialComplex& complex, int top, bool augmented) {
  ChainComplex cc;
  cc.augmented = augmented;
  const int dim = complex.dimension();
  const int last = top < 0 ? dim : std::min(top, dim);
  for (int k = 0; k <= last; ++k) {
    const auto& faces = complex.faces(k);
    cc.ranks.push_back(faces.size());
    SparseMatrix m;
    m.cols = faces.size();
    if (k == 0) {
      m.rows = augmented ? 1 : 0;
      if (augmented)
        for (std::size_t j = 0; j < faces.size(); ++j)
          m.entries.push_back({0, j, 1});
    } else {
      m.rows = complex.faces(k - 1).size();
      for (std::size_t j = 0; j < faces.size(); ++j) {
        const Face& f = faces[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
          Face sub = f;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
          const long long row = complex.index_of(sub);
          if (row < 0)
            throw std::invalid_argument("complex is not closed under faces");
          m.entries.push_back({static_cast<std::size_t>(row), j, i % 2 == 0 ? 1 : -1});
        }
      }
    }
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

const DegreeHomology& HomologyReport::at(int degree) const {
  return degrees.at(static_cast<std::size_t>(degree));
}

bool HomologyReport::vanishes_through(int k) const {
  if (k >= static_cast<int>(degrees.size()))
    throw std::out_of_range("report does not cover degree " + std::to_string(k));
  for (int i = 0; i <= k; ++i)
    if (!at(i).vanishes())
      return false;
  return true;
}

std::string HomologyReport::summary() const {
  std::ostringstream out;
  for (const auto& h : degrees) {
    out << (reduced ? "H~" : "H") << h.degree << " = ";
    bool any = false;
    if (h.betti > 0) {
      out << "Z";
      if (h.betti > 1)
        out << "^" << h.betti;
      any = true;
    }
    for (const auto& t : h.torsion) {
      out << (any ? " + " : "") << "Z/" << t;
      any = true;
    }
    if (!any)
      out << "0";
    out << '\n';
  }
  return out.str();
}

HomologyReport reduced_homology(const SimplicialComplex& complex, int max_degree,
                                const Budget& budget) {
  return compute(complex, max_degree, budget, true);
}

HomologyReport homology(const SimplicialComplex& complex, int max_degree, const Budget& budget) {
  return compute(complex, max_degree, budget, false);
}

bool is_homologically_k_connected(const SimplicialComplex& complex, int k, const Budget& budget) {
  if (k <= -2)
    return true;
  if (complex.empty())
    return false;
  if (k == -1)
    return true;
  return reduced_homology(complex, k, budget).vanishes_through(k);
}

long long euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  for (int d = 0; d <= complex.dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.faces(d).size());
  return chi;
}

bool euler_consistent(const SimplicialComplex& complex, const HomologyReport& report) {
  if (!report.complete)
    throw std::invalid_argument("euler_consistent needs a report covering every degree");
  long long alternating = 0;
  for (const auto& h : report.degrees)
    alternating += (h.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti);
  const long long expected = euler_characteristic(complex) - (report.reduced ? 1 : 0);
  return alternating == expected;
}

}  // namespace sigmakit
