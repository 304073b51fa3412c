#include "xnerve/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace xnerve {

  namespace {

    void check_capacity(std::uint64_t count, std::uint64_t cap,
                        std::string const& what) {
      if (count > cap) {
        throw CapacityError(what + ": " + std::to_string(count)
                            + " exceeds the budget of " + std::to_string(cap));
      }
    }

    std::uint64_t level_count(LevelProvider const& p, int n,
                              std::uint64_t cap) {
      if (n > p.max_dim()) {
        throw CapacityError("dimension " + std::to_string(n)
                            + " is above the provider's range");
      }
      auto const c = p.count(n);
      check_capacity(c, cap, "level " + std::to_string(n));
      return c;
    }

    // All faces of one level, faces[c * (n+1) + j] = d_j c.
    class FaceTable {
     public:
      FaceTable(LevelProvider const& p, int n, std::uint64_t cap)
          : n_(n), count_(level_count(p, n, cap)) {
        if (n < 1) {
          return;
        }
        faces_.resize(count_ * (n + 1));
        for (CellIndex c = 0; c < count_; ++c) {
          for (int j = 0; j <= n; ++j) {
            faces_[c * (n + 1) + j] = p.face(n, j, c);
          }
        }
      }

      std::uint64_t count() const { return count_; }
      CellIndex     at(CellIndex c, int j) const {
        return faces_[c * (n_ + 1) + j];
      }

     private:
      int                    n_;
      std::uint64_t          count_;
      std::vector<CellIndex> faces_;
    };

    // Enumerates compatible tuples (x_k)_{k != omitted} of (n-1)-cells in
    // lexicographic order. Candidates for x_k are looked up by the face they
    // share with the first placed position.
    void join(LevelProvider const& p, int n, int omitted, std::uint64_t cap,
              std::function<void(std::vector<CellIndex> const&)> const& emit) {
      int const m = n - 1;
      FaceTable faces(p, m, cap);

      std::vector<int> positions;
      for (int k = 0; k <= n; ++k) {
        if (k != omitted) {
          positions.push_back(k);
        }
      }
      int const first = positions.front();

      std::vector<std::vector<CellIndex>> bucket;
      if (m >= 1) {
        bucket.resize(level_count(p, m - 1, cap));
        for (CellIndex c = 0; c < faces.count(); ++c) {
          bucket[faces.at(c, first)].push_back(c);
        }
      }
      std::vector<CellIndex> all(faces.count());
      std::iota(all.begin(), all.end(), CellIndex{0});

      std::vector<CellIndex> cur(n + 1, 0);
      std::uint64_t          emitted = 0;

      std::function<void(std::size_t)> place = [&](std::size_t pi) {
        if (pi == positions.size()) {
          check_capacity(++emitted, cap, "tuple enumeration");
          emit(cur);
          return;
        }
        int const k = positions[pi];
        std::vector<CellIndex> const* cands = &all;
        if (m >= 1 && pi > 0) {
          cands = &bucket[faces.at(cur[first], k - 1)];
        }
        for (CellIndex x : *cands) {
          bool ok = true;
          for (std::size_t q = 1; q < pi && ok && m >= 1; ++q) {
            int const j = positions[q];
            ok = faces.at(x, j) == faces.at(cur[j], k - 1);
          }
          if (ok) {
            cur[k] = x;
            place(pi + 1);
          }
        }
      };
      place(0);
    }

    bool compatible(LevelProvider const& p, int n, int omitted,
                    std::vector<CellIndex> const& x) {
      if (n < 2) {
        return true;
      }
      for (int k = 0; k <= n; ++k) {
        for (int j = 0; j < k; ++j) {
          if (j == omitted || k == omitted) {
            continue;
          }
          if (p.face(n - 1, j, x[k]) != p.face(n - 1, k - 1, x[j])) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Audit
  ////////////////////////////////////////////////////////////////////////

  ValidationReport audit_simplicial(LevelProvider const& p, int maxdim,
                                    std::uint64_t cap) {
    ValidationReport report;
    auto             fail = [&](char const* label, int n, CellIndex c, int j,
                    int k) {
      if (report.has(label)) {
        return;
      }
      report.violations.push_back(
          {label,
           {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(c),
            static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)},
           "fails on " + p.describe(n, c) + " at j=" + std::to_string(j)
               + ", k=" + std::to_string(k)});
    };

    int const top = p.max_dim();
    for (int n = 0; n <= maxdim; ++n) {
      std::uint64_t const N = level_count(p, n, cap);
      for (CellIndex c = 0; c < N; ++c) {
        if (n >= 2) {
          for (int k = 1; k <= n; ++k) {
            for (int j = 0; j < k; ++j) {
              if (p.face(n - 1, j, p.face(n, k, c))
                  != p.face(n - 1, k - 1, p.face(n, j, c))) {
                fail(kFaceFace, n, c, j, k);
              }
            }
          }
        }
        if (n + 1 > top) {
          continue;
        }
        for (int j = 0; j <= n; ++j) {
          CellIndex s = p.degeneracy(n, j, c);
          if (p.face(n + 1, j, s) != c) {
            fail(kFaceDegenSame, n, c, j, j);
          }
          if (p.face(n + 1, j + 1, s) != c) {
            fail(kFaceDegenNext, n, c, j, j + 1);
          }
        }
        if (n >= 1) {
          for (int k = 1; k <= n; ++k) {
            for (int j = 0; j < k; ++j) {
              if (p.face(n + 1, j, p.degeneracy(n, k, c))
                  != p.degeneracy(n - 1, k - 1, p.face(n, j, c))) {
                fail(kFaceDegenBelow, n, c, j, k);
              }
            }
          }
          for (int k = 2; k <= n + 1; ++k) {
            for (int j = 0; j < k - 1; ++j) {
              if (p.face(n + 1, k, p.degeneracy(n, j, c))
                  != p.degeneracy(n - 1, j, p.face(n, k - 1, c))) {
                fail(kFaceDegenAbove, n, c, j, k);
              }
            }
          }
        }
        if (n + 2 > top) {
          continue;
        }
        for (int k = 1; k <= n + 1; ++k) {
          for (int j = 0; j < k; ++j) {
            if (p.degeneracy(n + 1, j, p.degeneracy(n, k - 1, c))
                != p.degeneracy(n + 1, k, p.degeneracy(n, j, c))) {
              fail(kDegenDegen, n, c, j, k);
            }
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernels and horns
  ////////////////////////////////////////////////////////////////////////

  Boundary boundary(LevelProvider const& p, int n, CellIndex c) {
    Boundary t{n, {}};
    for (int j = 0; j <= n; ++j) {
      t.faces.push_back(p.face(n, j, c));
    }
    return t;
  }

  Horn horn(LevelProvider const& p, int n, int l, CellIndex c) {
    Horn h{n, l, {}};
    for (int j = 0; j <= n; ++j) {
      h.faces.push_back(j == l ? 0 : p.face(n, j, c));
    }
    return h;
  }

  bool in_kernel(LevelProvider const& p, Boundary const& t) {
    return static_cast<int>(t.faces.size()) == t.dim + 1
           && compatible(p, t.dim, -1, t.faces);
  }

  bool in_horns(LevelProvider const& p, Horn const& h) {
    return static_cast<int>(h.faces.size()) == h.dim + 1
           && compatible(p, h.dim, h.omitted, h.faces);
  }

  std::vector<Boundary> simplicial_kernel(LevelProvider const& p, int n,
                                          std::uint64_t cap) {
    if (n < 1) {
      throw std::out_of_range("the simplicial kernel starts in dimension 1");
    }
    std::vector<Boundary> out;
    join(p, n, -1, cap,
         [&](std::vector<CellIndex> const& x) { out.push_back({n, x}); });
    return out;
  }

  std::vector<Horn> horns(LevelProvider const& p, int n, int l,
                          std::uint64_t cap) {
    if (n < 1 || l < 0 || l > n) {
      throw std::out_of_range("horn index out of range");
    }
    std::vector<Horn> out;
    join(p, n, l, cap,
         [&](std::vector<CellIndex> const& x) { out.push_back({n, l, x}); });
    return out;
  }

  Boundary beta(LevelProvider const& p, Horn const& h) {
    int const n = h.dim;
    int const l = h.omitted;
    if (n < 2) {
      throw std::out_of_range("beta needs a horn of dimension >= 2");
    }
    Boundary y{n - 1, {}};
    for (int i = 0; i < l; ++i) {
      y.faces.push_back(p.face(n - 1, l - 1, h.faces[i]));
    }
    for (int i = l + 1; i <= n; ++i) {
      y.faces.push_back(p.face(n - 1, l, h.faces[i]));
    }
    return y;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coskeletality and Kan
  ////////////////////////////////////////////////////////////////////////

  bool CoskeletalReport::bijective() const {
    return std::all_of(levels.begin(), levels.end(), [](auto const& l) {
      return l.injective && l.surjective;
    });
  }

  CoskeletalReport check_coskeletal(LevelProvider const& p, int n, int upto,
                                    std::uint64_t cap) {
    CoskeletalReport report;
    for (int k = std::max(n + 1, 1); k <= upto; ++k) {
      CoskeletalLevel lvl;
      lvl.dim = k;
      FaceTable faces(p, k, cap);
      lvl.cells = faces.count();

      std::vector<std::pair<std::vector<CellIndex>, CellIndex>> img;
      img.reserve(faces.count());
      for (CellIndex c = 0; c < faces.count(); ++c) {
        std::vector<CellIndex> b(k + 1);
        for (int j = 0; j <= k; ++j) {
          b[j] = faces.at(c, j);
        }
        img.emplace_back(std::move(b), c);
      }
      std::sort(img.begin(), img.end());
      for (std::size_t i = 1; i < img.size(); ++i) {
        if (img[i].first == img[i - 1].first) {
          lvl.injective = false;
          lvl.collision = std::pair{img[i - 1].second, img[i].second};
          break;
        }
      }
      std::vector<std::vector<CellIndex>> image;
      for (auto& [b, c] : img) {
        if (image.empty() || image.back() != b) {
          image.push_back(b);
        }
      }
      lvl.image = image.size();

      join(p, k, -1, cap, [&](std::vector<CellIndex> const& x) {
        ++lvl.kernel;
        if (!std::binary_search(image.begin(), image.end(), x)
            && !lvl.missing) {
          lvl.surjective = false;
          lvl.missing    = Boundary{k, x};
        }
      });
      report.levels.push_back(std::move(lvl));
    }
    return report;
  }

  bool KanReport::kan() const {
    return first_failure() == nullptr;
  }

  KanLevel const* KanReport::first_failure() const {
    for (auto const& l : levels) {
      if (!l.fillable) {
        return &l;
      }
    }
    return nullptr;
  }

  KanReport check_kan(LevelProvider const& p, int upto, int from,
                      std::uint64_t cap) {
    KanReport report;
    for (int k = std::max(from, 1); k <= upto; ++k) {
      FaceTable faces(p, k, cap);
      for (int l = 0; l <= k; ++l) {
        KanLevel lvl;
        lvl.dim     = k;
        lvl.omitted = l;
        std::vector<std::vector<CellIndex>> image;
        image.reserve(faces.count());
        for (CellIndex c = 0; c < faces.count(); ++c) {
          std::vector<CellIndex> h(k + 1, 0);
          for (int j = 0; j <= k; ++j) {
            if (j != l) {
              h[j] = faces.at(c, j);
            }
          }
          image.push_back(std::move(h));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        join(p, k, l, cap, [&](std::vector<CellIndex> const& x) {
          ++lvl.horns;
          if (lvl.fillable
              && !std::binary_search(image.begin(), image.end(), x)) {
            lvl.fillable = false;
            lvl.witness  = Horn{k, l, x};
          }
        });
        report.levels.push_back(std::move(lvl));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homotopy groups by brute force
  ////////////////////////////////////////////////////////////////////////

  CellIndex degenerate_point(LevelProvider const& p, CellIndex x, int n) {
    CellIndex c = x;
    for (int k = 0; k < n; ++k) {
      c = p.degeneracy(k, 0, c);
    }
    return c;
  }

  PiResult pi_bruteforce(LevelProvider const& p, int n, CellIndex basepoint,
                         std::uint64_t cap) {
    if (n < 1) {
      throw std::out_of_range("pi_n needs n >= 1");
    }
    if (basepoint >= level_count(p, 0, cap)) {
      throw std::out_of_range("basepoint is not a 0-cell");
    }
    auto kan = check_kan(p, n + 1, 1, cap);
    if (auto const* bad = kan.first_failure()) {
      throw RefusalError(
          "kan",
          {static_cast<std::uint32_t>(bad->dim),
           static_cast<std::uint32_t>(bad->omitted)},
          "not a Kan complex: a " + std::to_string(bad->dim)
              + "-horn omitting face " + std::to_string(bad->omitted)
              + " has no filler");
    }

    CellIndex const xn  = degenerate_point(p, basepoint, n);
    CellIndex const xn1 = degenerate_point(p, basepoint, n - 1);

    PiResult  res;
    FaceTable fn(p, n, cap);
    for (CellIndex y = 0; y < fn.count(); ++y) {
      bool sphere = true;
      for (int j = 0; j <= n && sphere; ++j) {
        sphere = fn.at(y, j) == xn1;
      }
      if (sphere) {
        res.spheres.push_back(y);
      }
    }
    auto pos = [&](CellIndex y) -> std::optional<std::size_t> {
      auto it = std::lower_bound(res.spheres.begin(), res.spheres.end(), y);
      if (it == res.spheres.end() || *it != y) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - res.spheres.begin());
    };

    std::vector<std::size_t> parent(res.spheres.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
      while (parent[a] != a) {
        a = parent[a] = parent[parent[a]];
      }
      return a;
    };

    FaceTable fw(p, n + 1, cap);
    for (CellIndex w = 0; w < fw.count(); ++w) {
      bool base = true;
      for (int j = 0; j < n && base; ++j) {
        base = fw.at(w, j) == xn;
      }
      if (!base) {
        continue;
      }
      auto y = pos(fw.at(w, n));
      auto z = pos(fw.at(w, n + 1));
      if (y && z) {
        auto a = find(*y), b = find(*z);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }

    // classes numbered by their minimal member
    res.class_of.assign(res.spheres.size(), 0);
    std::vector<std::size_t> class_id(res.spheres.size(), SIZE_MAX);
    for (std::size_t i = 0; i < res.spheres.size(); ++i) {
      std::size_t r = find(i);
      if (class_id[r] == SIZE_MAX) {
        class_id[r] = res.representatives.size();
        res.representatives.push_back(res.spheres[i]);
      }
      res.class_of[i] = class_id[r];
    }
    std::size_t const k = res.representatives.size();

    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> table(k * k, kUnset);
    for (CellIndex w = 0; w < fw.count(); ++w) {
      bool base = true;
      for (int j = 0; j < n - 1 && base; ++j) {
        base = fw.at(w, j) == xn;
      }
      if (!base) {
        continue;
      }
      auto y = pos(fw.at(w, n - 1));
      auto z = pos(fw.at(w, n + 1));
      if (!y || !z) {
        continue;
      }
      auto prod = pos(fw.at(w, n));
      if (!prod) {
        res.problems.push_back("product: d_" + std::to_string(n) + " of "
                               + p.describe(n + 1, w) + " is not a sphere");
        continue;
      }
      auto& slot = table[res.class_of[*y] * k + res.class_of[*z]];
      auto  v    = static_cast<std::uint32_t>(res.class_of[*prod]);
      if (slot == kUnset) {
        slot = v;
      } else if (slot != v) {
        res.problems.push_back("product: not well defined at "
                               + p.describe(n + 1, w));
      }
    }
    if (std::find(table.begin(), table.end(), kUnset) != table.end()) {
      res.problems.push_back("product: some pair of classes has no filler");
    }

    res.group.unit  = res.class_of[*pos(xn)];
    res.group.table = std::move(table);
    for (auto r : res.representatives) {
      res.group.labels.push_back(p.describe(n, r));
    }
    if (res.problems.empty()) {
      if (auto f = group_axiom_failure(res.group)) {
        res.problems.push_back(*f);
      } else if (n >= 2 && !is_abelian(res.group)) {
        res.problems.push_back("commutativity: pi_" + std::to_string(n)
                               + " is not abelian");
      }
    }
    if (res.problems.empty()) {
      res.group.tag = order_profile_tag(res.group);
    }
    return res;
  }

}  // namespace xnerve
