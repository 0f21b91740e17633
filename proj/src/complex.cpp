#include "sigmakit/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sigmakit {

namespace {

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = f.size();
    for (int v : f)
      h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

const std::vector<Face> kNoFaces;

void check_face(const Face& f, std::size_t vertex_count) {
  if (f.empty())
    throw std::invalid_argument("empty face");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= vertex_count)
      throw std::invalid_argument("face vertex out of range");
    if (i > 0 && f[i - 1] >= f[i])
      throw std::invalid_argument("face vertices must be strictly increasing");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 std::vector<Face> facets,
                                                 const Budget& budget) {
  std::vector<std::unordered_set<Face, FaceHash>> seen;
  std::size_t total = 0;
  auto insert = [&](Face f) {
    const std::size_t d = f.size() - 1;
    if (seen.size() <= d)
      seen.resize(d + 1);
    if (seen[d].insert(std::move(f)).second && ++total > budget.max_faces)
      throw BudgetExceeded("complex exceeds the face budget of " +
                           std::to_string(budget.max_faces));
  };
  for (std::size_t v = 0; v < vertex_count; ++v)
    insert({static_cast<int>(v)});
  for (auto& facet : facets) {
    std::sort(facet.begin(), facet.end());
    check_face(facet, vertex_count);
    if (facet.size() > 24)
      throw BudgetExceeded("facet too large to close");
    const std::size_t k = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1)
          sub.push_back(facet[i]);
      insert(std::move(sub));
    }
  }
  SimplicialComplex out;
  out.vertex_count_ = vertex_count;
  for (auto& level : seen) {
    out.by_dim_.emplace_back(level.begin(), level.end());
    std::sort(out.by_dim_.back().begin(), out.by_dim_.back().end());
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::size_t vertex_count,
                                                       std::vector<Face> faces) {
  SimplicialComplex out;
  out.vertex_count_ = vertex_count;
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    check_face(f, vertex_count);
    const std::size_t d = f.size() - 1;
    if (out.by_dim_.size() <= d)
      out.by_dim_.resize(d + 1);
    out.by_dim_[d].push_back(std::move(f));
  }
  for (auto& level : out.by_dim_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return out;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
  if (d < 0 || d >= static_cast<int>(by_dim_.size()))
    return kNoFaces;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_)
    total += level.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_dim_)
    out.push_back(level.size());
  return out;
}

long long SimplicialComplex::index_of(const Face& face) const {
  if (face.empty())
    return -1;
  const auto& level = faces(static_cast<int>(face.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it == level.end() || *it != face)
    return -1;
  return it - level.begin();
}

bool SimplicialComplex::contains(const Face& face) const { return index_of(face) >= 0; }

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::unordered_set<Face, FaceHash> covered;
    for (const auto& f : faces(d + 1)) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(sub));
      }
    }
    for (const auto& f : faces(d))
      if (!covered.count(f))
        out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_closed() const {
  for (int d = 1; d <= dimension(); ++d) {
    for (const auto& f : faces(d)) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        if (!contains(sub))
          return false;
      }
    }
  }
  if (by_dim_.empty())
    return true;
  return by_dim_[0].size() == vertex_count_;
}

void SimplicialComplex::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count_)
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertices) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> rename(vertex_count_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    rename.at(static_cast<std::size_t>(sorted[i])) = static_cast<int>(i);
  std::vector<Face> kept;
  for (const auto& level : by_dim_) {
    for (const auto& f : level) {
      Face g;
      for (int v : f) {
        if (rename[static_cast<std::size_t>(v)] < 0)
          break;
        g.push_back(rename[static_cast<std::size_t>(v)]);
      }
      if (g.size() == f.size())
        kept.push_back(std::move(g));
    }
  }
  SimplicialComplex out = from_closed_faces(sorted.size(), std::move(kept));
  if (!labels_.empty()) {
    std::vector<std::string> labels;
    for (int v : sorted)
      labels.push_back(labels_[static_cast<std::size_t>(v)]);
    out.labels_ = std::move(labels);
  }
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
  SimplicialComplex out = *this;
  if (d + 1 < static_cast<int>(out.by_dim_.size()))
    out.by_dim_.resize(static_cast<std::size_t>(std::max(d + 1, 0)));
  return out;
}

SimplicialComplex SimplicialComplex::cone() const {
  const int apex = static_cast<int>(vertex_count_);
  std::vector<Face> faces_out;
  faces_out.push_back({apex});
  for (const auto& level : by_dim_) {
    for (const auto& f : level) {
      faces_out.push_back(f);
      Face g = f;
      g.push_back(apex);
      faces_out.push_back(std::move(g));
    }
  }
  return from_closed_faces(vertex_count_ + 1, std::move(faces_out));
}

bool SimplicialComplex::is_cone_with_apex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_count_)
    return false;
  for (const auto& level : by_dim_) {
    for (const auto& f : level) {
      if (std::binary_search(f.begin(), f.end(), v))
        continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (!contains(g))
        return false;
    }
  }
  return true;
}

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
  out << "dim " << complex.dimension() << '\n';
  out << "vertices " << complex.vertex_count() << '\n';
  out << "faces " << complex.face_count() << '\n';
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const auto& f : complex.faces(d)) {
      for (std::size_t i = 0; i < f.size(); ++i)
        out << (i ? " " : "") << f[i];
      out << '\n';
    }
  }
}

SimplicialComplex read_complex(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto header = [&](const std::string& key) -> long long {
    if (!std::getline(in, line))
      throw ParseError("missing '" + key + "' header", line_no);
    ++line_no;
    std::istringstream ss(line);
    std::string word;
    long long value = 0;
    if (!(ss >> word >> value) || word != key)
      throw ParseError("expected '" + key + " <integer>'", line_no);
    return value;
  };
  const long long dim = header("dim");
  const long long vertices = header("vertices");
  const long long total = header("faces");
  if (vertices < 0 || total < 0 || dim < -1)
    throw ParseError("negative header value", line_no);
  std::vector<Face> faces;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::istringstream ss(line);
    Face f;
    long long v = 0;
    while (ss >> v) {
      if (v < 0 || v >= vertices)
        throw ParseError("vertex index out of range", line_no);
      f.push_back(static_cast<int>(v));
    }
    if (!ss.eof() || f.empty())
      throw ParseError("malformed face line", line_no);
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ParseError("face vertices must be strictly increasing", line_no);
    faces.push_back(std::move(f));
  }
  if (static_cast<long long>(faces.size()) != total)
    throw ParseError("face count does not match header", line_no);
  SimplicialComplex out =
      SimplicialComplex::from_closed_faces(static_cast<std::size_t>(vertices), std::move(faces));
  if (out.dimension() != dim || out.face_count() != static_cast<std::size_t>(total))
    throw ParseError("dimension or duplicate faces inconsistent with header", line_no);
  if (!out.is_closed())
    throw ParseError("face list is not closed under subsets", line_no);
  return out;
}

}  // namespace sigmakit
