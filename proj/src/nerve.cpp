#include "xnerve/nerve.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace xnerve {

  namespace {

    // Row-major upper triangular scratch matrix used while building cells.
    class Builder {
     public:
      explicit Builder(int n) : n_(n), e_(NerveCell::num_entries(n)) {}

      void set(int i, int j, std::uint32_t v) {
        e_[slot(i, j)] = v;
      }

      std::vector<std::uint32_t> take() {
        return std::move(e_);
      }

     private:
      std::size_t slot(int i, int j) const {
        return static_cast<std::size_t>((i - 1) * (n_ + 1) - (i - 1) * i / 2
                                        + (j - i));
      }

      int                        n_;
      std::vector<std::uint32_t> e_;
    };

    void require(bool ok, char const* what) {
      if (!ok) {
        throw std::out_of_range(what);
      }
    }

    bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
      return !__builtin_mul_overflow(a, b, &out);
    }

    bool checked_add(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
      return !__builtin_add_overflow(a, b, &out);
    }

  }  // namespace

  std::size_t NerveCellHash::operator()(NerveCell const& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    auto        mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto x : c.objects()) {
      mix(x.value);
    }
    for (auto v : c.entries()) {
      mix(v);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and typing
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<int, int>> check_cell(CrossedMonoid const& xm,
                                                NerveCell const&     c) {
    int const n = c.dim();
    if (n < 0) {
      return std::pair{0, 0};
    }
    for (auto x : c.objects()) {
      if (x.value >= xm.num_objects()) {
        return std::pair{0, 0};
      }
    }
    if (c.entries().size() != NerveCell::num_entries(n)) {
      return std::pair{0, 0};
    }
    for (int i = 1; i <= n; ++i) {
      Morphism g = c.diagonal(i);
      if (g.value >= xm.num_morphisms() || xm.source(g) != c.object(i)
          || xm.target(g) != c.object(i - 1)) {
        return std::pair{i, i};
      }
      for (int j = i + 1; j <= n; ++j) {
        Element a = c.entry(i, j);
        if (a.value >= xm.num_elements() || xm.owner(a) != c.object(i)) {
          return std::pair{i, j};
        }
      }
    }
    return std::nullopt;
  }

  NerveCell cell_new(CrossedMonoid const& xm, std::vector<Object> objects,
                     std::vector<std::uint32_t> entries) {
    if (objects.empty()) {
      throw CellTypeError(0, 0, "a cell needs at least one object");
    }
    int const n = static_cast<int>(objects.size()) - 1;
    if (entries.size() != NerveCell::num_entries(n)) {
      throw CellTypeError(0, 0,
                          "a " + std::to_string(n) + "-cell has "
                              + std::to_string(NerveCell::num_entries(n))
                              + " entries, got "
                              + std::to_string(entries.size()));
    }
    NerveCell c(std::move(objects), std::move(entries));
    if (auto bad = check_cell(xm, c)) {
      auto [i, j] = *bad;
      std::string what;
      if (i == 0) {
        what = "object sequence refers to an unknown object";
      } else if (i == j) {
        what = "diagonal entry (" + std::to_string(i) + "," + std::to_string(j)
               + ") is not a morphism x_" + std::to_string(i) + " -> x_"
               + std::to_string(i - 1);
      } else {
        what = "entry (" + std::to_string(i) + "," + std::to_string(j)
               + ") does not lie in A(x_" + std::to_string(i) + ")";
      }
      throw CellTypeError(i, j, what);
    }
    return c;
  }

  std::string to_text(NerveCell const& c) {
    std::string s = std::to_string(c.dim()) + " ;";
    for (auto x : c.objects()) {
      s += " " + std::to_string(x.value);
    }
    s += " ;";
    for (auto v : c.entries()) {
      s += " " + std::to_string(v);
    }
    return s;
  }

  NerveCell parse_cell(CrossedMonoid const& xm, std::string_view text) {
    std::string       t(text);
    std::stringstream ss(t);
    std::string       dim_part, obj_part, ent_part;
    if (!std::getline(ss, dim_part, ';') || !std::getline(ss, obj_part, ';')) {
      throw std::invalid_argument("cell text must look like 'n ; objects ; "
                                  "entries'");
    }
    std::getline(ss, ent_part);
    auto numbers = [](std::string const& part) {
      std::vector<std::uint32_t> out;
      std::stringstream          in(part);
      std::uint64_t              v;
      while (in >> v) {
        out.push_back(static_cast<std::uint32_t>(v));
      }
      if (!in.eof()) {
        throw std::invalid_argument("malformed number in cell text");
      }
      return out;
    };
    auto dims = numbers(dim_part);
    if (dims.size() != 1) {
      throw std::invalid_argument("cell text must start with its dimension");
    }
    std::vector<Object> objects;
    for (auto v : numbers(obj_part)) {
      objects.emplace_back(v);
    }
    if (objects.size() != dims[0] + 1) {
      throw std::invalid_argument("object count does not match dimension");
    }
    return cell_new(xm, std::move(objects), numbers(ent_part));
  }

  ////////////////////////////////////////////////////////////////////////
  // Simplicial structure
  ////////////////////////////////////////////////////////////////////////

  Morphism eta(CrossedMonoid const& xm, NerveCell const& m, int j, int k) {
    int const n = m.dim();
    require(j >= 0 && j < n, "eta: row index out of range");
    require(k >= j + 1 && k <= n, "eta: column index out of range");
    int const r    = j + 1;
    Element   prod = xm.unit(m.object(r));
    for (int c = r + 1; c <= k; ++c) {
      prod = xm.mul(prod, m.entry(r, c));
    }
    return xm.compose(m.diagonal(r), xm.boundary(prod));
  }

  NerveCell face(CrossedMonoid const& xm, NerveCell const& m, int j) {
    int const n = m.dim();
    require(n >= 1, "face: a 0-cell has no faces");
    require(j >= 0 && j <= n, "face: index out of range");

    if (n == 1) {
      // d_0 is the source, d_1 the target.
      return NerveCell::point(j == 0 ? m.object(1) : m.object(0));
    }

    std::vector<Object> objects;
    objects.reserve(n);
    for (int i = 0; i <= n; ++i) {
      if (i != j) {
        objects.push_back(m.object(i));
      }
    }

    Builder b(n - 1);
    if (j == 0) {
      for (int i = 1; i <= n - 1; ++i) {
        for (int c = i; c <= n - 1; ++c) {
          b.set(i, c, m.raw(i + 1, c + 1));
        }
      }
    } else if (j == n) {
      for (int i = 1; i <= n - 1; ++i) {
        for (int c = i; c <= n - 1; ++c) {
          b.set(i, c, m.raw(i, c));
        }
      }
    } else {
      // rows above j: multiply columns j and j+1
      for (int i = 1; i < j; ++i) {
        for (int c = i; c <= n - 1; ++c) {
          if (c < j) {
            b.set(i, c, m.raw(i, c));
          } else if (c == j) {
            b.set(i, c, xm.mul(m.entry(i, j), m.entry(i, j + 1)).value);
          } else {
            b.set(i, c, m.raw(i, c + 1));
          }
        }
      }
      // rows j and j+1 merge
      Morphism d = xm.compose(
          xm.compose(m.diagonal(j), xm.boundary(m.entry(j, j + 1))),
          m.diagonal(j + 1));
      b.set(j, j, d.value);
      for (int c = j + 1; c <= n - 1; ++c) {
        Element twisted = xm.act(m.entry(j, c + 1), eta(xm, m, j, c));
        b.set(j, c, xm.mul(twisted, m.entry(j + 1, c + 1)).value);
      }
      // rows below shift north-west
      for (int i = j + 1; i <= n - 1; ++i) {
        for (int c = i; c <= n - 1; ++c) {
          b.set(i, c, m.raw(i + 1, c + 1));
        }
      }
    }
    return NerveCell(std::move(objects), b.take());
  }

  NerveCell degeneracy(CrossedMonoid const& xm, NerveCell const& m, int j) {
    int const n = m.dim();
    require(n >= 0, "degeneracy: empty cell");
    require(j >= 0 && j <= n, "degeneracy: index out of range");

    if (n == 0) {
      Object p = m.object(0);
      return NerveCell({p, p}, {xm.identity(p).value});
    }

    std::vector<Object> objects(m.objects().begin(), m.objects().end());
    objects.insert(objects.begin() + j + 1, m.object(j));

    Builder   b(n + 1);
    Object    x = m.object(j);
    for (int i = 1; i <= j; ++i) {
      for (int c = i; c <= n + 1; ++c) {
        if (c < j + 1) {
          b.set(i, c, m.raw(i, c));
        } else if (c == j + 1) {
          b.set(i, c, xm.unit(m.object(i)).value);
        } else {
          b.set(i, c, m.raw(i, c - 1));
        }
      }
    }
    b.set(j + 1, j + 1, xm.identity(x).value);
    for (int c = j + 2; c <= n + 1; ++c) {
      b.set(j + 1, c, xm.unit(x).value);
    }
    for (int i = j + 2; i <= n + 1; ++i) {
      for (int c = i; c <= n + 1; ++c) {
        b.set(i, c, m.raw(i - 1, c - 1));
      }
    }
    return NerveCell(std::move(objects), b.take());
  }

  BoundaryTuple<NerveCell> boundary(CrossedMonoid const& xm,
                                    NerveCell const&     m) {
    BoundaryTuple<NerveCell> t{m.dim(), {}};
    for (int j = 0; j <= m.dim(); ++j) {
      t.faces.push_back(face(xm, m, j));
    }
    return t;
  }

  HornTuple<NerveCell> horn(CrossedMonoid const& xm, NerveCell const& m,
                            int l) {
    require(l >= 0 && l <= m.dim(), "horn: index out of range");
    HornTuple<NerveCell> h{m.dim(), l, {}};
    for (int j = 0; j <= m.dim(); ++j) {
      h.faces.push_back(j == l ? NerveCell() : face(xm, m, j));
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corner bijection
  ////////////////////////////////////////////////////////////////////////

  CornerTriple lambda(CrossedMonoid const& xm, NerveCell const& m) {
    int const n = m.dim();
    if (n < 2) {
      throw std::invalid_argument("lambda needs a cell of dimension >= 2");
    }
    return {face(xm, m, 0), face(xm, m, n), m.entry(1, n)};
  }

  NerveCell mu(CrossedMonoid const& xm, CornerTriple const& t) {
    int const n = t.first.dim() + 1;
    if (n < 2 || t.last.dim() != n - 1) {
      throw std::invalid_argument("mu: both cells must have dimension n-1 >= 1");
    }
    if (face(xm, t.first, n - 1) != face(xm, t.last, 0)) {
      throw std::invalid_argument("mu: d_{n-1} of the first cell differs from "
                                  "d_0 of the last cell");
    }
    if (t.corner.value >= xm.num_elements()
        || xm.owner(t.corner) != t.first.object(0)) {
      throw std::invalid_argument("mu: corner element does not lie in "
                                  "A(x_1)");
    }
    std::vector<Object> objects;
    objects.reserve(n + 1);
    objects.push_back(t.last.object(0));
    for (auto x : t.first.objects()) {
      objects.push_back(x);
    }
    Builder b(n);
    for (int i = 1; i <= n; ++i) {
      for (int c = i; c <= n; ++c) {
        if (i == 1 && c == n) {
          b.set(i, c, t.corner.value);
        } else if (c <= n - 1) {
          b.set(i, c, t.last.raw(i, c));
        } else {
          b.set(i, c, t.first.raw(i - 1, c - 1));
        }
      }
    }
    return NerveCell(std::move(objects), b.take());
  }

  CornerTriple face_of_mu(CrossedMonoid const& xm, CornerTriple const& t,
                          int j) {
    int const n = t.first.dim() + 1;
    if (n < 3 || t.last.dim() != n - 1) {
      throw std::invalid_argument("face_of_mu needs n >= 3");
    }
    if (j < 1 || j > n - 1) {
      throw std::out_of_range("face_of_mu: index must be in 1..n-1");
    }
    if (face(xm, t.first, n - 1) != face(xm, t.last, 0)) {
      throw std::invalid_argument("face_of_mu: incompatible corner triple");
    }
    Element corner = t.corner;
    if (j == 1) {
      Morphism twist = eta(xm, t.first, 0, n - 2);
      corner = xm.mul(xm.act(t.corner, twist), t.first.entry(1, n - 1));
    } else if (j == n - 1) {
      corner = xm.mul(t.last.entry(1, n - 1), t.corner);
    }
    return {face(xm, t.first, j - 1), face(xm, t.last, j), corner};
  }

  NerveCell induced_map(CrossedMonoid const& src, XMorphism const& f,
                        NerveCell const& cell) {
    (void) src;
    int const           n = cell.dim();
    std::vector<Object> objects;
    for (auto x : cell.objects()) {
      objects.push_back(f.objects.at(x.value));
    }
    Builder b(n);
    for (int i = 1; i <= n; ++i) {
      b.set(i, i, f.morphisms.at(cell.diagonal(i).value).value);
      for (int c = i + 1; c <= n; ++c) {
        b.set(i, c, f.elements.at(cell.entry(i, c).value).value);
      }
    }
    return NerveCell(std::move(objects), b.take());
  }

  ////////////////////////////////////////////////////////////////////////
  // NerveIndex
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t NerveIndex::edge(Object prev, Object next) const {
    return xm_->category().hom(next, prev).size();
  }

  std::uint64_t NerveIndex::weight(int n, int p, Object x) const {
    if (p < 1 || p > n - 1) {
      return 1;
    }
    std::uint64_t w = 1;
    auto const    k = static_cast<std::uint64_t>(xm_->fiber(x).size());
    for (int i = 0; i < n - p; ++i) {
      w *= k;  // bounded by count(n), checked at construction
    }
    return w;
  }

  NerveIndex::NerveIndex(CrossedMonoid const& xm, int max_dim)
      : xm_(&xm), max_dim_(-1) {
    std::size_t const O = xm.num_objects();
    for (int n = 0; n <= max_dim; ++n) {
      Level lvl;
      lvl.tail.assign(static_cast<std::size_t>(n + 1) * O, 0);
      bool ok = true;
      // weights with overflow check
      std::vector<std::uint64_t> w(static_cast<std::size_t>(n + 1) * O, 1);
      for (int p = 1; p <= n - 1 && ok; ++p) {
        for (std::size_t x = 0; x < O && ok; ++x) {
          std::uint64_t v = 1;
          auto const    k = static_cast<std::uint64_t>(
              xm.fiber(Object(static_cast<std::uint32_t>(x))).size());
          for (int i = 0; i < n - p && ok; ++i) {
            ok = checked_mul(v, k, v);
          }
          w[p * O + x] = v;
        }
      }
      for (std::size_t y = 0; y < O; ++y) {
        lvl.tail[n * O + y] = 1;
      }
      for (int p = n - 1; p >= 0 && ok; --p) {
        for (std::size_t y = 0; y < O && ok; ++y) {
          std::uint64_t sum = 0;
          for (std::size_t z = 0; z < O && ok; ++z) {
            std::uint64_t term = edge(Object(static_cast<std::uint32_t>(y)),
                                      Object(static_cast<std::uint32_t>(z)));
            ok = checked_mul(term, w[(p + 1) * O + z], term)
                 && checked_mul(term, lvl.tail[(p + 1) * O + z], term)
                 && checked_add(sum, term, sum);
          }
          lvl.tail[p * O + y] = sum;
        }
      }
      std::uint64_t total = 0;
      for (std::size_t y = 0; y < O && ok; ++y) {
        ok = checked_add(total, lvl.tail[y], total);
      }
      if (!ok) {
        break;
      }
      lvl.count = total;
      levels_.push_back(std::move(lvl));
      max_dim_ = n;
    }
  }

  std::uint64_t NerveIndex::count(int n) const {
    if (n < 0 || n > max_dim_) {
      throw CapacityError("dimension " + std::to_string(n)
                          + " is beyond the indexed range (max "
                          + std::to_string(max_dim_) + ")");
    }
    return levels_[n].count;
  }

  std::uint64_t NerveIndex::rank(NerveCell const& c) const {
    int const n = c.dim();
    count(n);  // range check
    std::size_t const O     = xm_->num_objects();
    auto const&       tail  = levels_[n].tail;
    std::uint64_t     r     = 0;
    std::uint64_t     scale = 1;
    for (int p = 0; p <= n; ++p) {
      Object const x = c.object(p);
      for (std::uint32_t y = 0; y < x.value; ++y) {
        std::uint64_t e = p > 0 ? edge(c.object(p - 1), Object(y)) : 1;
        r += scale * e * weight(n, p, Object(y)) * tail[p * O + y];
      }
      scale *= (p > 0 ? edge(c.object(p - 1), x) : 1) * weight(n, p, x);
    }
    std::uint64_t inner = 0;
    for (int i = 1; i <= n; ++i) {
      auto const  rows = xm_->category().hom(c.object(i), c.object(i - 1));
      inner = inner * rows.size() + xm_->category().hom_position(c.diagonal(i));
      auto const k = xm_->fiber(c.object(i)).size();
      for (int j = i + 1; j <= n; ++j) {
        inner = inner * k + xm_->local_index(c.entry(i, j));
      }
    }
    return r + inner;
  }

  NerveCell NerveIndex::unrank(int n, std::uint64_t r) const {
    if (r >= count(n)) {
      throw std::out_of_range("cell rank out of range");
    }
    std::size_t const   O    = xm_->num_objects();
    auto const&         tail = levels_[n].tail;
    std::vector<Object> objects;
    std::uint64_t       scale = 1;
    for (int p = 0; p <= n; ++p) {
      for (std::uint32_t y = 0; y < O; ++y) {
        std::uint64_t e = p > 0 ? edge(objects.back(), Object(y)) : 1;
        std::uint64_t block =
            scale * e * weight(n, p, Object(y)) * tail[p * O + y];
        if (r < block) {
          scale *= e * weight(n, p, Object(y));
          objects.emplace_back(y);
          break;
        }
        r -= block;
      }
    }
    // r is now the mixed-radix rank of the entries; decode from the back.
    Builder b(n);
    for (int i = n; i >= 1; --i) {
      auto const fib = xm_->fiber(objects[i]);
      for (int j = n; j > i; --j) {
        b.set(i, j, fib[r % fib.size()].value);
        r /= fib.size();
      }
      auto const h = xm_->category().hom(objects[i], objects[i - 1]);
      b.set(i, i, h[r % h.size()].value);
      r /= h.size();
    }
    return NerveCell(std::move(objects), b.take());
  }

  std::vector<NerveCell> enumerate(CrossedMonoid const& xm, int n,
                                   std::uint64_t cap) {
    if (n < 0) {
      throw std::out_of_range("negative dimension");
    }
    NerveIndex idx(xm, n);
    if (idx.max_dim() < n) {
      throw CapacityError("the number of " + std::to_string(n)
                          + "-cells overflows 64 bits");
    }
    std::uint64_t const total = idx.count(n);
    if (total > cap) {
      throw CapacityError(std::to_string(total) + " cells of dimension "
                          + std::to_string(n) + " exceed the budget of "
                          + std::to_string(cap));
    }
    std::vector<NerveCell> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) {
      out.push_back(idx.unrank(n, r));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // NerveProvider
  ////////////////////////////////////////////////////////////////////////

  NerveProvider::NerveProvider(CrossedMonoid xm, int max_dim)
      : xm_(std::move(xm)), index_(xm_, max_dim) {}

  CellIndex NerveProvider::face(int n, int j, CellIndex c) const {
    return index_.rank(xnerve::face(xm_, index_.unrank(n, c), j));
  }

  CellIndex NerveProvider::degeneracy(int n, int j, CellIndex c) const {
    return index_.rank(xnerve::degeneracy(xm_, index_.unrank(n, c), j));
  }

  std::string NerveProvider::describe(int n, CellIndex c) const {
    return to_text(index_.unrank(n, c));
  }

}  // namespace xnerve
