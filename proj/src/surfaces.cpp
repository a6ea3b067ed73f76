#include "hyptower/surfaces.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace hyptower {

bool valid_surface_datum(const SurfaceDatum& s) {
  if (s.boundary < 0 || s.euler > 2) return false;
  if (s.orientable) return s.euler + s.boundary <= 2 && (s.euler + s.boundary) % 2 == 0;
  return s.euler + s.boundary <= 1;
}

SurfaceDatum surface_datum(bool orientable, int euler, int boundary) {
  SurfaceDatum s{orientable, euler, boundary};
  if (!valid_surface_datum(s)) throw Error("invalid surface datum " + to_string(s));
  return s;
}

int euler_from_presentation_data(bool orientable, int handle_or_crosscap_count,
                                 int boundary_count) {
  if (handle_or_crosscap_count < 0 || boundary_count < 0)
    throw Error("negative surface counts");
  if (!orientable && handle_or_crosscap_count < 1)
    throw Error("a non-orientable surface needs at least one crosscap");
  return orientable ? 2 - 2 * handle_or_crosscap_count - boundary_count
                    : 2 - handle_or_crosscap_count - boundary_count;
}

int orientable_genus(const SurfaceDatum& s) {
  if (!s.orientable) throw Error("genus of a non-orientable surface");
  return (2 - s.euler - s.boundary) / 2;
}

int crosscap_count(const SurfaceDatum& s) {
  if (s.orientable) throw Error("crosscap count of an orientable surface");
  return 2 - s.euler - s.boundary;
}

int mixed_form_to_crosscaps(int handles, int crosscaps) {
  if (crosscaps < 1) throw Error("mixed form needs at least one crosscap");
  if (handles < 0) throw Error("negative handle count");
  return 2 * handles + crosscaps;
}

SurfaceDatum connected_sum(const SurfaceDatum& a, const SurfaceDatum& b) {
  if (!valid_surface_datum(a) || !valid_surface_datum(b)) throw Error("invalid summand");
  return SurfaceDatum{a.orientable && b.orientable, a.euler + b.euler - 2,
                      a.boundary + b.boundary};
}

SurfaceDatum puncture(const SurfaceDatum& s) {
  if (!valid_surface_datum(s)) throw Error("invalid surface datum");
  return SurfaceDatum{s.orientable, s.euler - 1, s.boundary + 1};
}

bool homeomorphic(const SurfaceDatum& a, const SurfaceDatum& b) { return a == b; }

std::string to_string(const SurfaceDatum& s) {
  std::ostringstream out;
  out << "surface(" << (s.orientable ? "orientable" : "nonorientable") << ", chi=" << s.euler
      << ", boundary=" << s.boundary << ")";
  return out.str();
}

SurfacePresentation standard_presentation(const SurfaceDatum& s) {
  if (!valid_surface_datum(s)) throw Error("invalid surface datum " + to_string(s));
  if (s.orientable && s.closed() && s.euler == 2)
    throw Unsupported("the sphere has no standard one-relator presentation here");

  std::vector<std::string> names;
  int core = 0;  // number of core generators
  if (s.orientable) {
    int m = orientable_genus(s);
    for (int i = 1; i <= m; ++i) {
      names.push_back("a" + std::to_string(i));
      names.push_back("b" + std::to_string(i));
    }
    core = 2 * m;
  } else {
    int q = crosscap_count(s);
    for (int i = 1; i <= q; ++i) names.push_back("d" + std::to_string(i));
    core = q;
  }
  for (int i = 1; i < s.boundary; ++i) names.push_back("g" + std::to_string(i));
  AlphabetRef alpha = Alphabet::make(names);

  Word core_word(alpha);
  if (s.orientable) {
    for (int i = 0; i < core; i += 2) {
      Word a(alpha, {static_cast<Sym>(i + 1)});
      Word b(alpha, {static_cast<Sym>(i + 2)});
      core_word = compose(core_word, commutator(a, b));
    }
  } else {
    for (int i = 0; i < core; ++i) {
      Word d(alpha, {static_cast<Sym>(i + 1)});
      core_word = compose(core_word, compose(d, d));
    }
  }

  SurfacePresentation sp;
  if (s.closed()) {
    Presentation p;
    p.generators = alpha;
    p.relators.emplace_back(core_word);
    sp.presentation = std::move(p);
  } else {
    Presentation p;
    p.generators = alpha;
    sp.presentation = std::move(p);
    Word extras(alpha);
    for (int i = 1; i < s.boundary; ++i) {
      Word g(alpha, {static_cast<Sym>(core + i)});
      sp.boundary_words.push_back(g);
      extras = compose(extras, g);
    }
    // Boundary words multiply to the core relator word.
    sp.boundary_words.push_back(compose(invert(extras), core_word));
  }
  return sp;
}

SurfacePresentation renamed(const SurfacePresentation& sp, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != sp.presentation.rank())
    throw Error("renaming needs one name per generator");
  AlphabetRef alpha = Alphabet::make(names);
  SurfacePresentation out;
  out.presentation.generators = alpha;
  for (const auto& r : sp.presentation.relators)
    out.presentation.relators.emplace_back(Word(alpha, r.representative().syms()));
  for (const auto& w : sp.boundary_words) out.boundary_words.emplace_back(alpha, w.syms());
  return out;
}

bool is_floor_admissible(const SurfaceDatum& s) {
  if (!valid_surface_datum(s)) throw Error("invalid surface datum " + to_string(s));
  if (s.closed()) throw Error("admissibility is defined for bounded pieces only");
  if (s.orientable && s.euler == -1 && s.boundary == 1) return true;  // once-punctured torus
  return s.euler <= -2;
}

namespace {

bool datum_less(const SurfaceDatum& a, const SurfaceDatum& b) {
  if (a.euler != b.euler) return a.euler > b.euler;
  if (a.boundary != b.boundary) return a.boundary < b.boundary;
  return a.orientable && !b.orientable;
}

int total_euler(const std::vector<SurfaceDatum>& v) {
  int s = 0;
  for (const auto& d : v) s += d.euler;
  return s;
}

int total_boundary(const std::vector<SurfaceDatum>& v) {
  int s = 0;
  for (const auto& d : v) s += d.boundary;
  return s;
}

std::string shape_key(const FloorProfile& p) {
  std::ostringstream out;
  for (const auto& d : p.surface_pieces) out << d.euler << ":" << d.boundary << ",";
  out << "|";
  for (const auto& d : p.complement_pieces) out << d.euler << ":" << d.boundary << ",";
  return out.str();
}

}  // namespace

bool FloorProfile::operator==(const FloorProfile& o) const {
  return surface_pieces == o.surface_pieces && complement_pieces == o.complement_pieces &&
         gluing_circles == o.gluing_circles &&
         rejected_for_orientability == o.rejected_for_orientability;
}

std::string to_string(const FloorProfile& p) {
  std::ostringstream out;
  out << "pieces=[";
  for (size_t i = 0; i < p.surface_pieces.size(); ++i) {
    if (i) out << ", ";
    out << to_string(p.surface_pieces[i]);
  }
  out << "] complements=[";
  for (size_t i = 0; i < p.complement_pieces.size(); ++i) {
    if (i) out << ", ";
    out << to_string(p.complement_pieces[i]);
  }
  out << "] circles=" << p.gluing_circles;
  if (p.rejected_for_orientability) out << " (rejected: orientability)";
  return out.str();
}

std::vector<FloorProfile> enumerate_floor_profiles(const SurfaceDatum& ambient, int piece_bound) {
  if (!valid_surface_datum(ambient)) throw Error("invalid ambient datum");
  if (!ambient.closed()) throw Error("profile enumeration expects a closed ambient surface");
  if (piece_bound < 2) throw Error("piece bound must allow at least two pieces");

  const int chi_a = ambient.euler;
  // Candidate pieces.  Boundaries are limited by datum validity, Euler
  // characteristics by the additivity constraint (all pieces have chi <= 0).
  std::vector<SurfaceDatum> surface_candidates, complement_candidates;
  for (int chi = chi_a; chi <= 0; ++chi) {
    for (int bd = 1; bd <= 2 - chi; ++bd) {
      for (bool orient : {true, false}) {
        if (ambient.orientable && !orient) continue;
        SurfaceDatum d{orient, chi, bd};
        if (!valid_surface_datum(d)) continue;
        if (chi <= -1 && is_floor_admissible(d)) surface_candidates.push_back(d);
        complement_candidates.push_back(d);
      }
    }
  }
  std::sort(surface_candidates.begin(), surface_candidates.end(), datum_less);
  std::sort(complement_candidates.begin(), complement_candidates.end(), datum_less);

  std::vector<FloorProfile> valid, rejected;
  std::set<std::string> valid_shapes;

  std::vector<SurfaceDatum> surfs, comps;
  auto consider = [&]() {
    if (total_euler(surfs) + total_euler(comps) != chi_a) return;
    int e = total_boundary(surfs);
    if (e != total_boundary(comps) || e < 1) return;
    int v = static_cast<int>(surfs.size() + comps.size());
    if (e < v - 1) return;  // pieces could not form a connected surface
    FloorProfile p;
    p.surface_pieces = surfs;
    p.complement_pieces = comps;
    p.gluing_circles = e;
    if (!ambient.orientable) {
      bool all_orientable = true;
      for (const auto& d : surfs) all_orientable &= d.orientable;
      for (const auto& d : comps) all_orientable &= d.orientable;
      if (all_orientable && e == v - 1) {
        // A tree of orientable pieces glues to an orientable total surface.
        p.rejected_for_orientability = true;
        rejected.push_back(std::move(p));
        return;
      }
    }
    valid_shapes.insert(shape_key(p));
    valid.push_back(std::move(p));
  };

  // Enumerate multisets (non-decreasing candidate indices) of surface and
  // complement pieces within the piece bound.
  std::function<void(size_t)> pick_comps = [&](size_t from) {
    if (!comps.empty()) consider();
    if (static_cast<int>(surfs.size() + comps.size()) >= piece_bound) return;
    for (size_t i = from; i < complement_candidates.size(); ++i) {
      if (total_euler(surfs) + total_euler(comps) + complement_candidates[i].euler < chi_a)
        continue;
      comps.push_back(complement_candidates[i]);
      pick_comps(i);
      comps.pop_back();
    }
  };
  std::function<void(size_t)> pick_surfs = [&](size_t from) {
    if (!surfs.empty()) pick_comps(0);
    if (static_cast<int>(surfs.size()) >= piece_bound - 1) return;
    for (size_t i = from; i < surface_candidates.size(); ++i) {
      if (total_euler(surfs) + surface_candidates[i].euler < chi_a) continue;
      surfs.push_back(surface_candidates[i]);
      pick_surfs(i);
      surfs.pop_back();
    }
  };
  pick_surfs(0);

  std::vector<FloorProfile> out = valid;
  for (auto& p : rejected)
    if (!valid_shapes.count(shape_key(p))) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const FloorProfile& a, const FloorProfile& b) {
    return to_string(a) < to_string(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string datum_key(const SurfaceDatum& d) {
  return (d.orientable ? "o" : "n") + std::to_string(d.euler) + ":" + std::to_string(d.boundary);
}

}  // namespace

std::vector<SurfaceDatum> proper_subsurface_data(const SurfaceDatum& ambient) {
  if (!valid_surface_datum(ambient)) throw Error("invalid surface datum");
  std::set<std::string> seen;
  std::deque<SurfaceDatum> queue;
  std::vector<SurfaceDatum> collected;

  auto offer = [&](const SurfaceDatum& d) {
    if (!valid_surface_datum(d) || d.euler > 0) return;
    if (seen.insert(datum_key(d)).second) {
      queue.push_back(d);
      collected.push_back(d);
    }
  };

  seen.insert(datum_key(ambient));
  queue.push_back(ambient);

  while (!queue.empty()) {
    SurfaceDatum s = queue.front();
    queue.pop_front();
    int r = s.boundary;
    if (s.orientable) {
      int m = orientable_genus(s);
      if (m >= 1) offer(SurfaceDatum{true, s.euler, r + 2});  // nonseparating cut
      for (int m1 = 0; m1 <= m; ++m1) {
        for (int r1 = 0; r1 <= r; ++r1) {
          SurfaceDatum p1{true, 2 - 2 * m1 - (r1 + 1), r1 + 1};
          SurfaceDatum p2{true, 2 - 2 * (m - m1) - (r - r1 + 1), r - r1 + 1};
          if (p1.euler > 0 || p2.euler > 0) continue;  // cut would be inessential
          offer(p1);
          offer(p2);
        }
      }
    } else {
      int q = crosscap_count(s);
      // two-sided nonseparating cuts
      if (q >= 3) offer(SurfaceDatum{false, s.euler, r + 2});
      if (q % 2 == 0) offer(SurfaceDatum{true, s.euler, r + 2});
      // one-sided cut removes a crosscap and adds one boundary circle
      offer(SurfaceDatum{q >= 2 ? false : true, s.euler, r + 1});
      // separating cuts
      for (int r1 = 0; r1 <= r; ++r1) {
        for (int q1 = 1; q1 < q; ++q1) {
          SurfaceDatum p1{false, 2 - q1 - (r1 + 1), r1 + 1};
          SurfaceDatum p2{false, 2 - (q - q1) - (r - r1 + 1), r - r1 + 1};
          if (p1.euler > 0 || p2.euler > 0) continue;
          offer(p1);
          offer(p2);
        }
        for (int m1 = 0; 2 * m1 <= q - 1; ++m1) {
          SurfaceDatum p1{true, 2 - 2 * m1 - (r1 + 1), r1 + 1};
          SurfaceDatum p2{false, 2 - (q - 2 * m1) - (r - r1 + 1), r - r1 + 1};
          if (p1.euler > 0 || p2.euler > 0) continue;
          offer(p1);
          offer(p2);
        }
      }
    }
  }

  std::vector<SurfaceDatum> out;
  for (const auto& d : collected)
    if (d != ambient) out.push_back(d);
  std::sort(out.begin(), out.end(), datum_less);
  return out;
}

}  // namespace hyptower
