#include "tcg/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tcg {

namespace {

bool isSubset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::fromFacets(int m, std::vector<Simplex> faces) {
  if (m < 0) throw InputError("complex: vertex count must be >= 0");
  SimplicialComplex k;
  k.m_ = m;
  for (auto& f : faces) {
    if (f.empty()) throw InputError("complex: empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) {
      if (v < 1 || v > m)
        throw InputError("complex: vertex " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // Antichain normalization: drop faces contained in another face.
  for (const auto& f : faces) {
    bool maximal = true;
    for (const auto& g : faces) {
      if (&f != &g && f != g && isSubset(f, g)) { maximal = false; break; }
    }
    if (maximal) k.facets_.push_back(f);
  }
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  for (const auto& f : facets_) {
    if (isSubset(s, f)) return true;
  }
  return false;
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::set<Simplex> all;
  for (const auto& f : facets_) {
    const size_t n = f.size();
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
      Simplex s;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (size_t{1} << i)) s.push_back(f[i]);
      }
      all.insert(std::move(s));
    }
  }
  std::vector<Simplex> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::set<int> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

std::vector<int> SimplicialComplex::ghostVertices() const {
  std::set<int> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  std::vector<int> out;
  for (int v = 1; v <= m_; ++v) {
    if (!vs.count(v)) out.push_back(v);
  }
  return out;
}

long long SimplicialComplex::eulerCharacteristic() const {
  long long chi = 0;
  for (const auto& s : simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

namespace {

struct Cursor {
  int line = 1;
  int col = 1;
  void advance(char c) {
    if (c == '\n') { ++line; col = 1; } else { ++col; }
  }
  std::string where() const { return std::to_string(line) + ":" + std::to_string(col); }
};

}  // namespace

SimplicialComplex parseComplexText(const std::string& text) {
  struct Segment {
    std::string body;
    Cursor start;
    bool sawContent = false;
  };
  std::vector<Segment> segments;
  Segment cur;
  Cursor pos;
  cur.start = pos;
  for (char c : text) {
    if (c == ';') {
      segments.push_back(cur);
      pos.advance(c);
      cur = Segment{};
      cur.start = pos;
    } else {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.sawContent) cur.start = pos;
        cur.sawContent = true;
      }
      cur.body.push_back(c);
      pos.advance(c);
    }
  }
  const bool trailingHasContent = cur.sawContent;
  if (trailingHasContent) segments.push_back(cur);

  int m = -1;  // -1: infer from max vertex
  std::vector<Simplex> faces;
  bool first = true;
  for (const auto& seg : segments) {
    std::string body = seg.body;
    if (!seg.sawContent)
      throw InputError("parse error at " + seg.start.where() + ": empty facet");
    if (first && body.find('=') != std::string::npos) {
      first = false;
      std::istringstream header(body);
      std::string key;
      std::getline(header, key, '=');
      key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
      if (key != "m")
        throw InputError("parse error at " + seg.start.where() + ": expected header m=<int>");
      std::string val;
      std::getline(header, val);
      try {
        size_t used = 0;
        std::string trimmed = val;
        trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
        m = std::stoi(trimmed, &used);
        if (used != trimmed.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("parse error at " + seg.start.where() + ": malformed vertex count '" + val + "'");
      }
      if (m < 0) throw InputError("parse error at " + seg.start.where() + ": vertex count must be >= 0");
      continue;
    }
    first = false;
    Simplex f;
    std::istringstream is(body);
    std::string tok;
    while (is >> tok) {
      int v = 0;
      try {
        size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("parse error at " + seg.start.where() + ": malformed vertex '" + tok + "'");
      }
      if (v < 1)
        throw InputError("parse error at " + seg.start.where() + ": vertex index " + std::to_string(v) + " < 1");
      f.push_back(v);
    }
    if (f.empty())
      throw InputError("parse error at " + seg.start.where() + ": empty facet");
    faces.push_back(std::move(f));
  }

  int maxVertex = 0;
  for (const auto& f : faces)
    for (int v : f) maxVertex = std::max(maxVertex, v);
  if (m < 0) m = maxVertex;
  if (maxVertex > m)
    throw InputError("parse error: vertex " + std::to_string(maxVertex) + " exceeds m=" + std::to_string(m));
  return SimplicialComplex::fromFacets(m, std::move(faces));
}

SubcomplexResult fullSubcomplex(const SimplicialComplex& k, const std::vector<int>& j) {
  std::vector<int> js(j);
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (int v : js) {
    if (v < 1 || v > k.vertexCount())
      throw InputError("full subcomplex: vertex " + std::to_string(v) + " outside [1," +
                       std::to_string(k.vertexCount()) + "]");
  }
  std::vector<int> newIndex(static_cast<size_t>(k.vertexCount()) + 1, 0);
  for (size_t i = 0; i < js.size(); ++i) newIndex[static_cast<size_t>(js[i])] = static_cast<int>(i) + 1;

  const SimplicialComplex ambient = fullSubcomplexAmbient(k, js);
  std::vector<Simplex> faces;
  for (const auto& f : ambient.facets()) {
    Simplex g;
    for (int v : f) g.push_back(newIndex[static_cast<size_t>(v)]);
    faces.push_back(std::move(g));
  }
  SubcomplexResult res;
  res.complex = SimplicialComplex::fromFacets(static_cast<int>(js.size()), std::move(faces));
  res.vertexMap = std::move(js);
  return res;
}

SimplicialComplex fullSubcomplexAmbient(const SimplicialComplex& k, const std::vector<int>& j) {
  std::vector<bool> inJ(static_cast<size_t>(k.vertexCount()) + 1, false);
  for (int v : j) {
    if (v < 1 || v > k.vertexCount())
      throw InputError("full subcomplex: vertex " + std::to_string(v) + " outside [1," +
                       std::to_string(k.vertexCount()) + "]");
    inJ[static_cast<size_t>(v)] = true;
  }
  std::vector<Simplex> faces;
  for (const auto& f : k.facets()) {
    Simplex g;
    for (int v : f) {
      if (inJ[static_cast<size_t>(v)]) g.push_back(v);
    }
    if (!g.empty()) faces.push_back(std::move(g));
  }
  return SimplicialComplex::fromFacets(k.vertexCount(), std::move(faces));
}

Components pathComponents(const SimplicialComplex& k) {
  const int m = k.vertexCount();
  std::vector<int> parent(static_cast<size_t>(m) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
  for (const auto& f : k.facets()) {
    for (size_t i = 1; i < f.size(); ++i) unite(f[0], f[static_cast<int>(i)]);
  }
  Components res;
  res.componentOf.assign(static_cast<size_t>(m), -1);
  std::vector<int> rootId(static_cast<size_t>(m) + 1, -1);
  std::vector<bool> nonGhost(static_cast<size_t>(m) + 1, false);
  for (const auto& f : k.facets())
    for (int v : f) nonGhost[static_cast<size_t>(v)] = true;
  int next = 0;
  std::vector<bool> componentNonGhost;
  for (int v = 1; v <= m; ++v) {
    int r = find(v);
    if (rootId[static_cast<size_t>(r)] < 0) {
      rootId[static_cast<size_t>(r)] = next++;
      componentNonGhost.push_back(false);
    }
    res.componentOf[static_cast<size_t>(v - 1)] = rootId[static_cast<size_t>(r)];
    if (nonGhost[static_cast<size_t>(v)])
      componentNonGhost[static_cast<size_t>(rootId[static_cast<size_t>(r)])] = true;
  }
  res.count = next;
  res.nonGhostCount = static_cast<int>(std::count(componentNonGhost.begin(), componentNonGhost.end(), true));
  return res;
}

Subdivision barycentricSubdivision(const SimplicialComplex& k) {
  const auto simps = k.simplices();
  std::map<Simplex, int> indexOf;  // simplex -> new vertex id (1-based)
  for (size_t i = 0; i < simps.size(); ++i) indexOf[simps[i]] = static_cast<int>(i) + 1;

  Subdivision sd;
  sd.vertexSimplex = simps;
  sd.ghostOrigin.assign(simps.size(), 0);
  const auto ghosts = k.ghostVertices();
  for (int g : ghosts) {
    sd.vertexSimplex.push_back({});
    sd.ghostOrigin.push_back(g);
  }
  const int newM = static_cast<int>(sd.vertexSimplex.size());

  // Facets are the full flags: prefix chains of vertex orderings of each facet.
  std::set<Simplex> flagFacets;
  for (const auto& f : k.facets()) {
    Simplex perm = f;
    std::sort(perm.begin(), perm.end());
    do {
      Simplex chain;
      Simplex prefix;
      for (int v : perm) {
        prefix.push_back(v);
        Simplex sortedPrefix = prefix;
        std::sort(sortedPrefix.begin(), sortedPrefix.end());
        chain.push_back(indexOf.at(sortedPrefix));
      }
      std::sort(chain.begin(), chain.end());
      flagFacets.insert(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sd.complex = SimplicialComplex::fromFacets(
      newM, std::vector<Simplex>(flagFacets.begin(), flagFacets.end()));
  return sd;
}

std::string simplexToString(const Simplex& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

}  // namespace tcg
