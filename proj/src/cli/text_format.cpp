#include "torsionlab/cli/text_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    struct Line {
      std::string_view text;  // comment stripped
      std::size_t      number;
    };

    struct Section {
      std::vector<Line> lines;
      std::size_t       header_line = 0;
    };

    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
    }

    //! Scanner over one line; columns are 1-based.
    class Cursor {
     public:
      Cursor(std::string_view s, std::size_t line, std::size_t offset = 0)
          : _s(s), _line(line), _offset(offset) {}

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _line, _offset + _pos + 1);
      }
      [[noreturn]] void fail_at(std::size_t pos, std::string const& msg) const {
        throw ParseError(msg, _line, _offset + pos + 1);
      }

      void skip_ws() {
        while (_pos < _s.size() && std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
      }
      bool at_end() {
        skip_ws();
        return _pos >= _s.size();
      }
      char peek() {
        skip_ws();
        return _pos < _s.size() ? _s[_pos] : '\0';
      }
      bool accept(std::string_view tok) {
        skip_ws();
        if (_s.substr(_pos, tok.size()) == tok) {
          _pos += tok.size();
          return true;
        }
        return false;
      }
      void expect(std::string_view tok) {
        if (!accept(tok)) {
          fail("expected '" + std::string(tok) + "'");
        }
      }
      std::string_view ident() {
        skip_ws();
        std::size_t start = _pos;
        while (_pos < _s.size() && is_ident_char(_s[_pos])) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a name");
        }
        return _s.substr(start, _pos - start);
      }
      //! Integer or fraction, optionally signed.
      std::string_view number() {
        skip_ws();
        std::size_t start = _pos;
        if (_pos < _s.size() && _s[_pos] == '-') {
          ++_pos;
        }
        auto digits = [&] {
          std::size_t d = _pos;
          while (_pos < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
            ++_pos;
          }
          if (d == _pos) {
            fail("expected a number");
          }
        };
        digits();
        if (_pos < _s.size() && _s[_pos] == '/') {
          ++_pos;
          digits();
        }
        return _s.substr(start, _pos - start);
      }
      std::string_view rest() {
        skip_ws();
        auto r = _s.substr(_pos);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) {
          r.remove_suffix(1);
        }
        return r;
      }
      std::size_t pos() {
        skip_ws();
        return _pos;
      }
      std::size_t offset() const {
        return _offset;
      }
      std::size_t line() const {
        return _line;
      }

     private:
      std::string_view _s;
      std::size_t      _line;
      std::size_t      _offset;
      std::size_t      _pos = 0;
    };

    Section find_section(std::string_view text, std::string_view kind) {
      Section     sec;
      bool        inside = false;
      std::size_t number = 0;
      std::size_t start  = 0;
      while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        if (!line.empty() && line.back() == '\r') {
          line.remove_suffix(1);
        }
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos) {
          if (line[first] == '[') {
            if (inside) {
              return sec;
            }
            std::size_t close = line.find(']', first);
            if (close == std::string_view::npos) {
              throw ParseError("unterminated section header", number, first + 1);
            }
            if (line.substr(first + 1, close - first - 1) == kind) {
              inside          = true;
              sec.header_line = number;
            }
          } else if (inside) {
            sec.lines.push_back({line, number});
          }
        }
        if (end == text.size()) {
          break;
        }
        start = end + 1;
      }
      if (!inside) {
        throw ParseError("no [" + std::string(kind) + "] section", 1, 1);
      }
      return sec;
    }

    //! Splits "key: value" or "key name: value"; returns the cursor past ':'.
    std::pair<std::string_view, Cursor> key_of(Line const& l) {
      Cursor c(l.text, l.number);
      auto   key = c.ident();
      return {key, c};
    }

    //! One term of a linear combination of paths.
    struct ParsedTerm {
      Scalar                        coefficient;
      std::vector<std::string>      factors;  // written left to right, i.e. last arrow first
      std::vector<std::size_t>      columns;
    };

    //! expr := "0" | term (("+" | "-") term)*; term := [scalar "*"] factor ("*" factor)*
    std::vector<ParsedTerm> parse_combination(Cursor& c, Field f, std::string_view stop = "") {
      std::vector<ParsedTerm> terms;
      auto at_stop = [&] { return c.at_end() || (!stop.empty() && c.peek() == stop[0]); };
      if (c.peek() == '0') {
        std::size_t p = c.pos();
        c.number();
        if (at_stop()) {
          return terms;
        }
        c.fail_at(p, "a lone 0 must be the whole expression");
      }
      Scalar sign = Scalar::one(f);
      if (c.accept("-")) {
        sign = -sign;
      }
      while (true) {
        ParsedTerm t{sign, {}, {}};
        char       p = c.peek();
        if (std::isdigit(static_cast<unsigned char>(p)) || p == '-') {
          std::size_t at = c.pos();
          auto        n  = c.number();
          try {
            t.coefficient = sign * parse_scalar(f, n);
          } catch (Error const& e) {
            c.fail_at(at, e.what());
          }
          c.expect("*");
        }
        while (true) {
          t.columns.push_back(c.pos() + c.offset());
          auto name = c.ident();
          if (name == "id") {
            c.expect("(");
            auto obj = c.ident();
            c.expect(")");
            t.factors.push_back("id(" + std::string(obj) + ")");
          } else {
            t.factors.push_back(std::string(name));
          }
          if (!c.accept("*")) {
            break;
          }
        }
        terms.push_back(std::move(t));
        if (at_stop()) {
          return terms;
        }
        if (c.accept("+")) {
          sign = Scalar::one(f);
        } else if (c.accept("-")) {
          sign = -Scalar::one(f);
        } else {
          c.fail("expected '+', '-' or end of expression");
        }
      }
    }

    bool is_identity_factor(std::string_view f) {
      return f.size() > 4 && f.substr(0, 3) == "id(" && f.back() == ')';
    }

    std::string coefficient_prefix(Scalar const& s) {
      return s.is_one() ? "" : s.to_string() + "*";
    }

    std::string matrix_text(Matrix const& m) {
      std::string s = "[";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          s += (j ? ", " : "") + m.at(i, j).to_string();
        }
        s += "]";
      }
      return s + "]";
    }

    Matrix parse_matrix(Cursor& c, Field f, std::size_t rows, std::size_t cols) {
      std::vector<Scalar> entries;
      std::size_t         start = c.pos();
      c.expect("[");
      std::size_t r = 0;
      if (!c.accept("]")) {
        do {
          c.expect("[");
          std::size_t k = 0;
          if (!c.accept("]")) {
            do {
              std::size_t at = c.pos();
              auto        n  = c.number();
              try {
                entries.push_back(parse_scalar(f, n));
              } catch (Error const& e) {
                c.fail_at(at, e.what());
              }
              ++k;
            } while (c.accept(","));
            c.expect("]");
          }
          if (k != cols) {
            c.fail_at(start, "row " + std::to_string(r + 1) + " has " + std::to_string(k)
                                 + " entries, expected " + std::to_string(cols));
          }
          ++r;
        } while (c.accept(","));
        c.expect("]");
      }
      if (r != rows) {
        c.fail_at(start, "matrix has " + std::to_string(r) + " rows, expected " + std::to_string(rows));
      }
      return Matrix(f, rows, cols, std::move(entries));
    }

    std::size_t object_at(Category const& cat, Cursor const& c, std::size_t col, std::string_view name) {
      for (std::size_t i = 0; i < cat.object_count(); ++i) {
        if (cat.object_name(i) == name) {
          return i;
        }
      }
      throw ParseError("unknown object '" + std::string(name) + "'", c.line(), col + 1);
    }

    std::string join_generators(Category const& cat, std::vector<Morphism> const& gens) {
      if (gens.empty()) {
        return "0";
      }
      std::string s;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        s += (k ? ", " : "") + morphism_label(cat, gens[k]);
      }
      return s;
    }

    //! Comma-separated morphism expressions into `target`.
    std::vector<Morphism> parse_generator_list(Cursor& c, Category const& cat, std::size_t target) {
      std::vector<Morphism> gens;
      std::size_t           base = c.offset() + c.pos();
      std::string_view      rest = c.rest();
      std::size_t           from = 0;
      while (true) {
        std::size_t comma = rest.find(',', from);
        auto piece = rest.substr(from, comma == std::string_view::npos ? std::string_view::npos : comma - from);
        try {
          if (piece.find_first_not_of(" \t") == std::string_view::npos) {
            throw ParseError("empty generator", 1, 1);
          }
          if (auto g = parse_morphism(piece, cat, target)) {
            gens.push_back(*g);
          }
        } catch (ParseError const& e) {
          throw ParseError(e.message(), c.line(), base + from + e.column());
        }
        if (comma == std::string_view::npos) {
          return gens;
        }
        from = comma + 1;
      }
    }
  }  // namespace

  // ------------------------------------------------------------- morphisms

  std::optional<Morphism> parse_morphism(std::string_view expr, Category const& cat, std::optional<std::size_t> target) {
    Cursor c(expr, 1);
    auto   terms = parse_combination(c, cat.field());
    if (!c.at_end()) {
      c.fail("trailing input");
    }
    std::optional<Morphism> sum;
    for (auto const& t : terms) {
      std::optional<Morphism> m;
      // Factors are written last arrow first; compose right to left.
      for (std::size_t k = t.factors.size(); k-- > 0;) {
        auto        f   = t.factors[k];
        std::size_t col = t.columns[k];
        Morphism    step;
        if (is_identity_factor(f)) {
          step = cat.identity(object_at(cat, c, col + 3, f.substr(3, f.size() - 4)));
        } else {
          std::optional<std::size_t> idx;
          for (std::size_t a = 0; a < cat.arrows().size(); ++a) {
            if (cat.arrows()[a].name == f) {
              idx = a;
            }
          }
          if (!idx) {
            c.fail_at(col, "unknown arrow '" + std::string(f) + "'");
          }
          step = cat.arrow_morphism(*idx);
        }
        if (m && m->target != step.source) {
          c.fail_at(col, "'" + std::string(f) + "' does not compose with the factor to its right");
        }
        m = m ? cat.compose(step, *m) : step;
      }
      Morphism scaled{m->source, m->target, scale(t.coefficient, m->coords)};
      if (target && scaled.target != *target) {
        c.fail_at(t.columns.front(), "term ends at " + cat.object_name(scaled.target) + ", expected "
                                         + cat.object_name(*target));
      }
      if (sum && (sum->source != scaled.source || sum->target != scaled.target)) {
        c.fail_at(t.columns.front(), "terms of one expression must be parallel");
      }
      sum = sum ? Morphism{sum->source, sum->target, add(sum->coords, scaled.coords)} : scaled;
    }
    if (sum && sum->is_zero()) {
      return std::nullopt;
    }
    return sum;
  }

  std::vector<Morphism> minimal_generators(RightIdeal const& i) {
    std::vector<Morphism> kept = i.generators();
    for (std::size_t k = 0; k < kept.size();) {
      std::vector<Morphism> rest = kept;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      if (right_ideal_closure(i.category_ptr(), i.target(), rest) == i) {
        kept = std::move(rest);
      } else {
        ++k;
      }
    }
    return kept;
  }

  // -------------------------------------------------------------- category

  CategoryPresentation parse_category(std::string_view text) {
    auto                 sec = find_section(text, "category");
    CategoryPresentation p;
    bool                 have_field = false, have_objects = false, have_bound = false;
    std::vector<std::pair<Line, std::size_t>> relations;
    for (auto const& l : sec.lines) {
      auto [key, c] = key_of(l);
      if (key == "field") {
        c.expect(":");
        std::size_t at = c.pos();
        try {
          p.field = Field::parse(c.rest());
        } catch (Error const& e) {
          c.fail_at(at, e.what());
        }
        have_field = true;
      } else if (key == "objects") {
        c.expect(":");
        if (have_objects) {
          c.fail("objects declared twice");
        }
        while (!c.at_end()) {
          std::size_t at   = c.pos();
          auto        name = std::string(c.ident());
          for (auto const& o : p.objects) {
            if (o == name) {
              c.fail_at(at, "duplicate object '" + name + "'");
            }
          }
          p.objects.push_back(name);
        }
        if (p.objects.empty()) {
          c.fail("empty objects list");
        }
        have_objects = true;
      } else if (key == "arrow") {
        if (!have_objects) {
          c.fail("arrow before objects");
        }
        std::size_t at   = c.pos();
        auto        name = std::string(c.ident());
        if (std::isdigit(static_cast<unsigned char>(name[0])) || name == "id") {
          c.fail_at(at, "arrow names must not start with a digit or be 'id'");
        }
        for (auto const& a : p.arrows) {
          if (a.name == name) {
            c.fail_at(at, "duplicate arrow '" + name + "'");
          }
        }
        c.expect(":");
        std::size_t sat = c.pos();
        auto        s   = p.object_index(std::string(c.ident()));
        if (!s) {
          c.fail_at(sat, "unknown object in arrow '" + name + "'");
        }
        c.expect("->");
        std::size_t tat = c.pos();
        auto        t   = p.object_index(std::string(c.ident()));
        if (!t) {
          c.fail_at(tat, "unknown object in arrow '" + name + "'");
        }
        if (!c.at_end()) {
          c.fail("trailing input");
        }
        p.arrows.push_back({name, *s, *t});
      } else if (key == "relation") {
        c.expect(":");
        relations.push_back({l, c.pos()});
      } else if (key == "bound") {
        c.expect(":");
        std::size_t at = c.pos();
        auto        n  = c.number();
        long long   v  = std::stoll(std::string(n));
        if (v < 1) {
          c.fail_at(at, "bound must be at least 1");
        }
        p.nilpotency_bound = static_cast<std::size_t>(v);
        have_bound         = true;
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", l.number, 1 + (key.data() - l.text.data()));
      }
    }
    if (!have_field) {
      throw ParseError("missing 'field'", sec.header_line, 1);
    }
    if (!have_objects) {
      throw ParseError("missing 'objects'", sec.header_line, 1);
    }
    for (auto const& [l, offset] : relations) {
      Cursor c(l.text.substr(offset), l.number, offset);
      auto   terms = parse_combination(c, p.field, "=");
      c.expect("=");
      std::size_t zat = c.pos();
      if (c.number() != "0" || !c.at_end()) {
        c.fail_at(zat, "relations must read '... = 0'");
      }
      Relation rel;
      for (auto const& t : terms) {
        Path path;
        bool first = true;
        for (std::size_t k = t.factors.size(); k-- > 0;) {
          auto        f   = t.factors[k];
          std::size_t col = t.columns[k];
          if (is_identity_factor(f)) {
            auto o = p.object_index(std::string(f.substr(3, f.size() - 4)));
            if (!o || t.factors.size() != 1) {
              throw ParseError("bad identity factor '" + std::string(f) + "'", l.number, col + 1);
            }
            path = {*o, *o, {}};
            continue;
          }
          auto a = p.arrow_index(std::string(f));
          if (!a) {
            throw ParseError("relation names unknown arrow '" + std::string(f) + "'", l.number, col + 1);
          }
          if (first) {
            path  = {p.arrows[*a].source, p.arrows[*a].target, {*a}};
            first = false;
          } else {
            if (p.arrows[*a].source != path.target) {
              throw ParseError("arrow '" + std::string(f) + "' does not compose", l.number, col + 1);
            }
            path.arrows.push_back(*a);
            path.target = p.arrows[*a].target;
          }
        }
        rel.terms.push_back({t.coefficient, path});
      }
      p.relations.push_back(std::move(rel));
    }
    if (!have_bound) {
      p.nilpotency_bound = exact_nilpotency_bound(p);
    }
    p.validate();
    return p;
  }

  std::string serialize_category(CategoryPresentation const& p) {
    std::ostringstream out;
    out << "[category]\n";
    out << "field: " << p.field.to_string() << "\n";
    out << "objects:";
    for (auto const& o : p.objects) {
      out << " " << o;
    }
    out << "\n";
    for (auto const& a : p.arrows) {
      out << "arrow " << a.name << ": " << p.objects[a.source] << " -> " << p.objects[a.target] << "\n";
    }
    for (auto const& r : p.relations) {
      out << "relation: ";
      for (std::size_t k = 0; k < r.terms.size(); ++k) {
        out << (k ? " + " : "") << coefficient_prefix(r.terms[k].coefficient) << p.path_label(r.terms[k].path);
      }
      out << " = 0\n";
    }
    out << "bound: " << p.nilpotency_bound << "\n";
    return out.str();
  }

  // ---------------------------------------------------------------- module

  Module parse_module(std::string_view text, CategoryPtr const& cat) {
    auto                     sec = find_section(text, "module");
    std::vector<std::size_t> dims;
    bool                     have_dims = false;
    std::vector<std::optional<Matrix>> mats(cat->arrows().size());
    for (auto const& l : sec.lines) {
      auto [key, c] = key_of(l);
      if (key == "dims") {
        c.expect(":");
        while (!c.at_end()) {
          std::size_t at = c.pos();
          auto        n  = c.number();
          if (n[0] == '-' || n.find('/') != std::string_view::npos) {
            c.fail_at(at, "dimensions are nonnegative integers");
          }
          dims.push_back(std::stoul(std::string(n)));
        }
        if (dims.size() != cat->object_count()) {
          c.fail("expected " + std::to_string(cat->object_count()) + " dimensions");
        }
        have_dims = true;
      } else if (key == "action") {
        if (!have_dims) {
          c.fail("action before dims");
        }
        std::size_t at   = c.pos();
        auto        name = c.ident();
        std::optional<std::size_t> idx;
        for (std::size_t a = 0; a < cat->arrows().size(); ++a) {
          if (cat->arrows()[a].name == name) {
            idx = a;
          }
        }
        if (!idx) {
          c.fail_at(at, "unknown arrow '" + std::string(name) + "'");
        }
        if (mats[*idx]) {
          c.fail_at(at, "action of '" + std::string(name) + "' given twice");
        }
        c.expect(":");
        auto const& arr = cat->arrows()[*idx];
        mats[*idx]      = parse_matrix(c, cat->field(), dims[arr.source], dims[arr.target]);
        if (!c.at_end()) {
          c.fail("trailing input");
        }
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", l.number, 1 + (key.data() - l.text.data()));
      }
    }
    if (!have_dims) {
      throw ParseError("missing 'dims'", sec.header_line, 1);
    }
    std::vector<Matrix> arrow_mats;
    for (std::size_t a = 0; a < mats.size(); ++a) {
      auto const& arr = cat->arrows()[a];
      if (!mats[a]) {
        if (dims[arr.source] != 0 && dims[arr.target] != 0) {
          throw ParseError("missing action of '" + arr.name + "'", sec.header_line, 1);
        }
        mats[a] = Matrix(cat->field(), dims[arr.source], dims[arr.target]);
      }
      arrow_mats.push_back(*mats[a]);
    }
    Module m      = Module::from_arrow_matrices(cat, dims, arrow_mats);
    auto   broken = check_functoriality(m);
    if (!broken.empty()) {
      throw InvariantViolation("not a module: " + broken.front());
    }
    return m;
  }

  std::string serialize_module(Module const& m) {
    std::ostringstream out;
    out << "[module]\n";
    out << "dims:";
    for (auto d : m.dims()) {
      out << " " << d;
    }
    out << "\n";
    for (std::size_t a = 0; a < m.cat().arrows().size(); ++a) {
      out << "action " << m.cat().arrows()[a].name << ": " << matrix_text(m.arrow_action(a)) << "\n";
    }
    return out.str();
  }

  // ----------------------------------------------------------------- ideal

  RightIdeal parse_ideal(std::string_view text, CategoryPtr const& cat) {
    auto                       sec = find_section(text, "ideal");
    std::optional<std::size_t> target;
    std::vector<Morphism>      gens;
    for (auto const& l : sec.lines) {
      auto [key, c] = key_of(l);
      c.expect(":");
      if (key == "target") {
        std::size_t at = c.pos();
        target         = object_at(*cat, c, at, c.ident());
        if (!c.at_end()) {
          c.fail("trailing input");
        }
      } else if (key == "gen") {
        if (!target) {
          c.fail("gen before target");
        }
        for (auto const& g : parse_generator_list(c, *cat, *target)) {
          gens.push_back(g);
        }
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", l.number, 1 + (key.data() - l.text.data()));
      }
    }
    if (!target) {
      throw ParseError("missing 'target'", sec.header_line, 1);
    }
    return right_ideal_closure(cat, *target, gens);
  }

  std::string serialize_ideal(RightIdeal const& i) {
    std::ostringstream out;
    out << "[ideal]\n";
    out << "target: " << i.cat().object_name(i.target()) << "\n";
    out << "gen: " << join_generators(i.cat(), minimal_generators(i)) << "\n";
    return out.str();
  }

  // ---------------------------------------------------------------- filter

  FilterFamily parse_filter(std::string_view text, CategoryPtr const& cat) {
    auto                                 sec = find_section(text, "filter");
    std::vector<std::vector<RightIdeal>> base(cat->object_count());
    for (auto const& l : sec.lines) {
      auto [key, c] = key_of(l);
      if (key != "base") {
        throw ParseError("unknown key '" + std::string(key) + "'", l.number, 1 + (key.data() - l.text.data()));
      }
      std::size_t at  = c.pos();
      std::size_t obj = object_at(*cat, c, at, c.ident());
      c.expect(":");
      base[obj].push_back(right_ideal_closure(cat, obj, parse_generator_list(c, *cat, obj)));
    }
    for (std::size_t o = 0; o < base.size(); ++o) {
      if (base[o].empty()) {
        throw ParseError("no base ideal for object " + cat->object_name(o), sec.header_line, 1);
      }
    }
    return FilterFamily(cat, std::move(base));
  }

  std::string serialize_filter(FilterFamily const& f) {
    std::ostringstream out;
    out << "[filter]\n";
    for (std::size_t c = 0; c < f.cat().object_count(); ++c) {
      for (auto const& i : f.base(c)) {
        out << "base " << f.cat().object_name(c) << ": " << join_generators(f.cat(), minimal_generators(i)) << "\n";
      }
    }
    return out.str();
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

}  // namespace torsionlab
