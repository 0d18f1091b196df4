#include "dbc/doublebox.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace dbc {

namespace {

bool in_intersection_space(const Box& b, int a, int bb, int c) {
  return b.x >= a && b.y >= bb && b.z >= c;
}

// classify on raw sorted absolute box lists (the enumeration hot path)
BoxTyping classify_raw(int a, int b, int c, const std::vector<Box>* e) {
  BoxTyping ty;
  ty.a = a;
  ty.b = b;
  ty.c = c;
  auto member = [&](int m, const Box& bx) {
    return std::binary_search(e[m].begin(), e[m].end(), bx);
  };
  std::set<Box> all;
  for (int m = 0; m < 3; ++m) all.insert(e[m].begin(), e[m].end());
  for (const Box& bx : all) {
    int cnt = member(0, bx) + member(1, bx) + member(2, bx);
    if (cnt == 3) {
      ty.type3.push_back(bx);
    } else if (cnt == 2) {
      ty.type2.push_back(bx);
    } else {
      for (int m = 0; m < 3; ++m)
        if (member(m, bx)) ty.type1[m].push_back(bx);
    }
    // boxes outside the intersection space lie in pairwise disjoint regions
    if (cnt >= 2 && !in_intersection_space(bx, a, b, c))
      throw std::logic_error("shared box outside the intersection space");
  }
  return ty;
}

bool criterion1_raw(int a, int b, int c, const std::vector<Box>* e) {
  auto member = [&](int m, const Box& bx) {
    return std::binary_search(e[m].begin(), e[m].end(), bx);
  };
  for (int m = 0; m < 3; ++m)
    for (const Box& bx : e[m]) {
      if (!in_intersection_space(bx, a, b, c)) continue;
      int cnt = member(0, bx) + member(1, bx) + member(2, bx);
      if (cnt < 2) return false;
    }
  return true;
}

}  // namespace

BoxTriple BoxTriple::make(int a, int b, int c, const PlanePartition& e1,
                          const PlanePartition& e2, const PlanePartition& e3) {
  if (e1.basepoint() != Box{0, b, c} || e2.basepoint() != Box{a, 0, c} ||
      e3.basepoint() != Box{a, b, 0})
    throw std::invalid_argument("triple basepoints do not match (a,b,c)");
  return BoxTriple{e1, e2, e3, a, b, c};
}

BoxTyping classify(const BoxTriple& t) {
  std::vector<Box> e[3] = {t.eta1.absolute_boxes(), t.eta2.absolute_boxes(),
                           t.eta3.absolute_boxes()};
  return classify_raw(t.a, t.b, t.c, e);
}

bool criterion1(const BoxTriple& t) {
  std::vector<Box> e[3] = {t.eta1.absolute_boxes(), t.eta2.absolute_boxes(),
                           t.eta3.absolute_boxes()};
  return criterion1_raw(t.a, t.b, t.c, e);
}

std::vector<int32_t> BoxTyping::key() const {
  std::vector<int32_t> k;
  auto pack = [&](const std::vector<Box>& v) {
    for (const Box& b : v)
      k.push_back(((b.x + 64) << 14) | ((b.y + 64) << 7) | (b.z + 64));
    k.push_back(-1);
  };
  for (int m = 0; m < 3; ++m) pack(type1[m]);
  pack(type2);
  pack(type3);
  return k;
}

PlanePartition reconstruct_eta(const BoxTyping& ty, const Assignment& f,
                               int m) {
  const Box bps[3] = {{0, ty.b, ty.c}, {ty.a, 0, ty.c}, {ty.a, ty.b, 0}};
  std::vector<Box> abs = ty.type1[m - 1];
  abs.insert(abs.end(), ty.type3.begin(), ty.type3.end());
  for (size_t i = 0; i < ty.type2.size(); ++i)
    if (f[i] != m) abs.push_back(ty.type2[i]);
  return PlanePartition::from_absolute(abs, bps[m - 1]);
}

std::vector<Assignment> valid_assignments(const BoxTyping& ty) {
  size_t k = ty.type2.size();
  std::vector<Assignment> out;
  Assignment f(k, 1);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == k) {
      try {
        for (int m = 1; m <= 3; ++m) (void)reconstruct_eta(ty, f, m);
      } catch (const std::invalid_argument&) {
        return;
      }
      out.push_back(f);
      return;
    }
    for (uint8_t m = 1; m <= 3; ++m) {
      f[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Box> moveable_boxes(const BoxTyping& ty) {
  auto assigns = valid_assignments(ty);
  if (assigns.empty())
    throw std::invalid_argument("typing is unrealizable (no representatives)");
  std::vector<Box> out;
  for (size_t i = 0; i < ty.type2.size(); ++i) {
    uint8_t first = assigns[0][i];
    for (const auto& f : assigns)
      if (f[i] != first) {
        out.push_back(ty.type2[i]);
        break;
      }
  }
  return out;
}

int box_components(const std::vector<Box>& boxes) {
  std::set<Box> todo(boxes.begin(), boxes.end());
  int comps = 0;
  while (!todo.empty()) {
    ++comps;
    std::vector<Box> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
      Box b = stack.back();
      stack.pop_back();
      const Box nbrs[6] = {{b.x + 1, b.y, b.z}, {b.x - 1, b.y, b.z},
                           {b.x, b.y + 1, b.z}, {b.x, b.y - 1, b.z},
                           {b.x, b.y, b.z + 1}, {b.x, b.y, b.z - 1}};
      for (const Box& nb : nbrs) {
        auto it = todo.find(nb);
        if (it != todo.end()) {
          stack.push_back(nb);
          todo.erase(it);
        }
      }
    }
  }
  return comps;
}

BigInt contribution(const BoxTyping& ty) {
  BigInt chi = 1;
  chi <<= box_components(moveable_boxes(ty));
  return chi;
}

int weight(const BoxTyping& ty) {
  return (int)(ty.type1[0].size() + ty.type1[1].size() + ty.type1[2].size() +
               ty.type2.size() + 2 * ty.type3.size());
}

namespace {

DoubleBoxClass finish_class(BoxTyping ty) {
  DoubleBoxClass cls;
  cls.weight = weight(ty);
  cls.assignments = valid_assignments(ty);
  if (cls.assignments.empty())
    throw std::logic_error("enumerated typing has no representative");
  for (size_t i = 0; i < ty.type2.size(); ++i) {
    uint8_t first = cls.assignments[0][i];
    for (const auto& f : cls.assignments)
      if (f[i] != first) {
        cls.moveable.push_back(ty.type2[i]);
        break;
      }
  }
  cls.components = box_components(cls.moveable);
  cls.chi = 1;
  cls.chi <<= cls.components;
  cls.typing = std::move(ty);
  return cls;
}

struct KeyHash {
  size_t operator()(const std::vector<int32_t>& k) const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : k) {
      h ^= (size_t)(uint32_t)v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using ClassMap = std::unordered_map<std::vector<int32_t>, BoxTyping, KeyHash>;

struct TripleScan {
  int a, b, c, max_weight;
  std::vector<int> volume;
  // absolute box lists per basepoint
  std::vector<std::vector<Box>> abs1, abs2, abs3;

  TripleScan(int a_, int b_, int c_, int w,
             const std::vector<PlanePartition>& pps)
      : a(a_), b(b_), c(c_), max_weight(w) {
    const Box bp1{0, b, c}, bp2{a, 0, c}, bp3{a, b, 0};
    abs1.resize(pps.size());
    abs2.resize(pps.size());
    abs3.resize(pps.size());
    volume.resize(pps.size());
    for (size_t i = 0; i < pps.size(); ++i) {
      volume[i] = pps[i].volume();
      for (const Box& bx : pps[i].boxes()) {
        abs1[i].push_back(bx + bp1);
        abs2[i].push_back(bx + bp2);
        abs3[i].push_back(bx + bp3);
      }
    }
  }

  void run_outer(size_t i1, ClassMap& found) const {
    if (volume[i1] > max_weight) return;
    std::vector<Box> e[3];
    for (size_t i2 = 0; i2 < abs2.size(); ++i2) {
      if (volume[i1] + volume[i2] > 2 * max_weight) continue;
      for (size_t i3 = 0; i3 < abs3.size(); ++i3) {
        if (volume[i1] + volume[i2] + volume[i3] > 2 * max_weight) continue;
        e[0] = abs1[i1];
        e[1] = abs2[i2];
        e[2] = abs3[i3];
        if (!criterion1_raw(a, b, c, e)) continue;
        BoxTyping ty = classify_raw(a, b, c, e);
        if (weight(ty) > max_weight) continue;
        auto k = ty.key();
        found.emplace(std::move(k), std::move(ty));
      }
    }
  }
};

}  // namespace

std::vector<DoubleBoxClass> enumerate_classes(int a, int b, int c,
                                              int max_weight, int jobs) {
  if (a < 0 || b < 0 || c < 0 || max_weight < 0)
    throw std::invalid_argument("parameters must be nonnegative");
  auto pps = enumerate_by_volume(max_weight);
  TripleScan scan(a, b, c, max_weight, pps);

  ClassMap found;
#ifdef _OPENMP
  int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  int nthreads = 1;
  (void)jobs;
#endif
  if (nthreads > 1) {
#ifdef _OPENMP
    std::vector<ClassMap> local((size_t)nthreads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (size_t i1 = 0; i1 < pps.size(); ++i1)
      scan.run_outer(i1, local[omp_get_thread_num()]);
    for (auto& m : local)
      for (auto& [k, ty] : m) found.emplace(k, std::move(ty));
#endif
  } else {
    for (size_t i1 = 0; i1 < pps.size(); ++i1) scan.run_outer(i1, found);
  }

  std::vector<DoubleBoxClass> classes;
  classes.reserve(found.size());
  for (auto& [k, ty] : found) classes.push_back(finish_class(std::move(ty)));
  std::sort(classes.begin(), classes.end(),
            [](const DoubleBoxClass& x, const DoubleBoxClass& y) {
              if (x.weight != y.weight) return x.weight < y.weight;
              return x.typing.key() < y.typing.key();
            });
  return classes;
}

QSeries zdbc(int a, int b, int c, int trunc_order, int jobs) {
  auto classes = enumerate_classes(a, b, c, trunc_order, jobs);
  std::vector<BigInt> coeffs(trunc_order + 1, BigInt(0));
  for (const auto& cls : classes)
    if (cls.weight <= trunc_order) coeffs[cls.weight] += cls.chi;
  return QSeries(std::move(coeffs), trunc_order);
}

std::string DoubleBoxClass::to_json() const {
  nlohmann::json j;
  j["params"] = {typing.a, typing.b, typing.c};
  auto boxes_json = [](const std::vector<Box>& v) {
    auto arr = nlohmann::json::array();
    for (const Box& b : v) arr.push_back({b.x, b.y, b.z});
    return arr;
  };
  j["type1"] = {boxes_json(typing.type1[0]), boxes_json(typing.type1[1]),
                boxes_json(typing.type1[2])};
  j["type2"] = boxes_json(typing.type2);
  j["type3"] = boxes_json(typing.type3);
  j["weight"] = weight;
  j["moveable"] = boxes_json(moveable);
  j["components"] = components;
  j["chi"] = chi.str();
  j["num_representatives"] = assignments.size();
  return j.dump();
}

}  // namespace dbc
