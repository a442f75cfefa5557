#include "qhom/io.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace qhom {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;
};

struct Token {
  std::string value;
  int line;
  int col;
};

// splits a physical line into whitespace-separated tokens, tracking columns
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> cur;
  int line = 1, col = 1;
  std::string word;
  int word_col = 1;
  auto flush_word = [&]() {
    if (!word.empty()) {
      cur.push_back({word, line, word_col});
      word.clear();
    }
  };
  auto flush_line = [&]() {
    flush_word();
    if (!cur.empty()) lines.push_back(std::move(cur));
    cur.clear();
  };
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      flush_line();
      ++line;
      col = 1;
      comment = false;
      continue;
    }
    if (comment) {
      ++col;
      continue;
    }
    if (c == '#') {
      comment = true;
      ++col;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush_word();
      ++col;
      continue;
    }
    if (word.empty()) word_col = col;
    word.push_back(c);
    ++col;
  }
  flush_line();
  return lines;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Scalar parse_scalar(const Field& f, const std::string& s, int line, int col) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_integer(s))
        throw ParseError(ParseError::Syntax, line, col, "expected a number: " + s);
      return f.of_int(std::stoll(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
      throw ParseError(ParseError::Syntax, line, col, "expected a fraction: " + s);
    return f.of_fraction(std::stoll(num), std::stoll(den));
  } catch (const ArithmeticOverflow& e) {
    throw ParseError(ParseError::FieldMismatch, line, col, e.what());
  } catch (const std::out_of_range&) {
    throw ParseError(ParseError::Syntax, line, col, "number out of range: " + s);
  }
}

// parses "[[1,0],[2,1]]" into rows of scalars
std::vector<std::vector<Scalar>> parse_matrix(const Field& f, const std::string& s,
                                              int line, int col) {
  std::vector<std::vector<Scalar>> rows;
  size_t i = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(ParseError::Syntax, line, col + static_cast<int>(i), msg);
  };
  auto skip = [&]() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip();
  if (i >= s.size() || s[i] != '[') throw fail("matrix must start with '['");
  ++i;
  skip();
  if (i < s.size() && s[i] == ']') return rows;  // empty matrix "[]"
  while (true) {
    skip();
    if (i >= s.size() || s[i] != '[') throw fail("matrix row must start with '['");
    ++i;
    std::vector<Scalar> row;
    skip();
    while (i < s.size() && s[i] != ']') {
      size_t start = i;
      while (i < s.size() && s[i] != ',' && s[i] != ']') ++i;
      std::string entry = s.substr(start, i - start);
      entry.erase(std::remove_if(entry.begin(), entry.end(), ::isspace), entry.end());
      if (!entry.empty())
        row.push_back(parse_scalar(f, entry, line, col + static_cast<int>(start)));
      if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) throw fail("unterminated matrix row");
    ++i;  // closing ']'
    rows.push_back(std::move(row));
    skip();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip();
  if (i >= s.size() || s[i] != ']') throw fail("matrix must end with ']'");
  return rows;
}

PathWord parse_path(const Quiver& q, const std::string& s, int line, int col) {
  PathWord w;
  size_t start = 0;
  while (start <= s.size()) {
    size_t dot = s.find('.', start);
    std::string name =
        dot == std::string::npos ? s.substr(start) : s.substr(start, dot - start);
    if (name.empty())
      throw ParseError(ParseError::Syntax, line, col, "empty arrow name in path");
    int a = q.arrow_id(name);
    if (a < 0)
      throw ParseError(ParseError::UnknownArrow, line, col,
                       "unknown arrow in path: " + name);
    if (!w.arrows.empty() && q.arrow(w.arrows.back()).tgt != q.arrow(a).src)
      throw ParseError(ParseError::NonComposablePath, line, col,
                       "arrow " + name + " does not compose with the previous one");
    if (w.arrows.empty()) w.vertex = q.arrow(a).src;
    w.arrows.push_back(a);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

Relation parse_relation_line(const Quiver& q, const Field& f,
                             const std::vector<Token>& toks) {
  // tokens: term (+|- term)*, term = [coeff*]path
  Relation rel;
  bool negate = false;
  size_t i = 0;
  while (i < toks.size()) {
    if (toks[i].value == "+" || toks[i].value == "-") {
      negate = toks[i].value == "-";
      ++i;
      if (i >= toks.size())
        throw ParseError(ParseError::Syntax, toks.back().line, toks.back().col,
                         "dangling sign in relation");
    }
    const Token& t = toks[i];
    std::string term = t.value;
    Scalar coeff = f.one();
    bool neg_local = negate;
    std::string pathpart = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = parse_scalar(f, term.substr(0, star), t.line, t.col);
      pathpart = term.substr(star + 1);
    }
    if (!pathpart.empty() && pathpart[0] == '-') {
      neg_local = !neg_local;
      pathpart = pathpart.substr(1);
    }
    if (neg_local) coeff = f.neg(coeff);
    PathWord w = parse_path(q, pathpart, t.line, t.col);
    rel.push_back({coeff, w});
    negate = false;
    ++i;
  }
  return rel;
}

}  // namespace

Document parse_document(const std::string& text) {
  auto lines = tokenize(text);
  Document doc;
  bool have_field = false, have_quiver = false;
  enum Section { None, InQuiver, InRelations, InModule } section = None;
  ModuleSpec* cur_module = nullptr;
  std::set<std::string> module_names;

  auto keyword = [](const std::string& s) {
    return s == "field" || s == "quiver" || s == "relations" || s == "module" ||
           s == "end";
  };

  for (const auto& toks : lines) {
    const Token& head = toks[0];
    if (keyword(head.value)) {
      cur_module = nullptr;
      if (head.value == "end") {
        section = None;
        continue;
      }
      if (head.value == "field") {
        if (have_field)
          throw ParseError(ParseError::DuplicateName, head.line, head.col,
                           "duplicate field declaration");
        if (toks.size() == 2 && toks[1].value == "Q") {
          doc.field = Field::rationals();
        } else if (toks.size() == 3 && toks[1].value == "F" &&
                   is_integer(toks[2].value)) {
          try {
            doc.field = Field::prime(
                static_cast<std::uint32_t>(std::stoll(toks[2].value)));
          } catch (const BadField& e) {
            throw ParseError(ParseError::BadFieldDecl, head.line, head.col, e.what());
          }
        } else {
          throw ParseError(ParseError::BadFieldDecl, head.line, head.col,
                           "expected 'field F <p>' or 'field Q'");
        }
        have_field = true;
        section = None;
        continue;
      }
      if (!have_field)
        throw ParseError(ParseError::Syntax, head.line, head.col,
                         "the field must be declared first");
      if (head.value == "quiver") {
        have_quiver = true;
        section = InQuiver;
        continue;
      }
      if (head.value == "relations") {
        if (!have_quiver)
          throw ParseError(ParseError::Syntax, head.line, head.col,
                           "relations before the quiver block");
        section = InRelations;
        continue;
      }
      // module <name>
      if (toks.size() != 2)
        throw ParseError(ParseError::Syntax, head.line, head.col,
                         "expected 'module <name>'");
      if (!have_quiver)
        throw ParseError(ParseError::Syntax, head.line, head.col,
                         "module before the quiver block");
      if (!module_names.insert(toks[1].value).second)
        throw ParseError(ParseError::DuplicateName, head.line, head.col,
                         "duplicate module name: " + toks[1].value);
      doc.modules.push_back(ModuleSpec{toks[1].value, {}, {}});
      cur_module = &doc.modules.back();
      section = InModule;
      continue;
    }

    switch (section) {
      case None:
        throw ParseError(ParseError::Syntax, head.line, head.col,
                         "unexpected content outside any block: " + head.value);
      case InQuiver: {
        if (head.value == "vertex" && toks.size() == 2) {
          try {
            doc.quiver.add_vertex(toks[1].value);
          } catch (const QuiverError& e) {
            throw ParseError(ParseError::DuplicateName, head.line, head.col,
                             e.what());
          }
        } else if (head.value == "arrow" && toks.size() == 4) {
          if (doc.quiver.vertex_id(toks[2].value) < 0)
            throw ParseError(ParseError::UnknownVertex, toks[2].line, toks[2].col,
                             "unknown vertex: " + toks[2].value);
          if (doc.quiver.vertex_id(toks[3].value) < 0)
            throw ParseError(ParseError::UnknownVertex, toks[3].line, toks[3].col,
                             "unknown vertex: " + toks[3].value);
          try {
            doc.quiver.add_arrow(toks[1].value, toks[2].value, toks[3].value);
          } catch (const QuiverError& e) {
            throw ParseError(ParseError::DuplicateName, head.line, head.col,
                             e.what());
          }
        } else {
          throw ParseError(ParseError::Syntax, head.line, head.col,
                           "expected 'vertex <id>' or 'arrow <name> <src> <tgt>'");
        }
        break;
      }
      case InRelations:
        doc.relations.push_back(parse_relation_line(doc.quiver, doc.field, toks));
        break;
      case InModule: {
        assert(cur_module);
        if (head.value == "dim") {
          for (size_t i = 1; i < toks.size(); ++i) {
            auto eq = toks[i].value.find('=');
            if (eq == std::string::npos)
              throw ParseError(ParseError::Syntax, toks[i].line, toks[i].col,
                               "expected <vertex>=<dim>");
            std::string vn = toks[i].value.substr(0, eq);
            std::string dv = toks[i].value.substr(eq + 1);
            if (doc.quiver.vertex_id(vn) < 0)
              throw ParseError(ParseError::UnknownVertex, toks[i].line, toks[i].col,
                               "unknown vertex: " + vn);
            if (!is_integer(dv) || std::stoll(dv) < 0)
              throw ParseError(ParseError::Syntax, toks[i].line, toks[i].col,
                               "bad dimension: " + dv);
            cur_module->dims[vn] = static_cast<int>(std::stoll(dv));
          }
        } else if (head.value == "map" && toks.size() >= 3) {
          if (doc.quiver.arrow_id(toks[1].value) < 0)
            throw ParseError(ParseError::UnknownArrow, toks[1].line, toks[1].col,
                             "unknown arrow: " + toks[1].value);
          std::string rest;
          for (size_t i = 2; i < toks.size(); ++i) rest += toks[i].value;
          cur_module->maps[toks[1].value] =
              parse_matrix(doc.field, rest, toks[2].line, toks[2].col);
        } else {
          throw ParseError(ParseError::Syntax, head.line, head.col,
                           "expected 'dim ...' or 'map <arrow> [[...]]'");
        }
        break;
      }
    }
  }
  if (!have_field)
    throw ParseError(ParseError::Syntax, 1, 1, "missing field declaration");
  if (!have_quiver)
    throw ParseError(ParseError::Syntax, 1, 1, "missing quiver block");

  // shape validation for module blocks
  for (const auto& ms : doc.modules) {
    for (const auto& [arrow_name, rows] : ms.maps) {
      int a = doc.quiver.arrow_id(arrow_name);
      const Arrow& ar = doc.quiver.arrow(a);
      auto dim_of = [&](int v) {
        auto it = ms.dims.find(doc.quiver.vertex_name(v));
        return it == ms.dims.end() ? 0 : it->second;
      };
      int want_rows = dim_of(ar.tgt), want_cols = dim_of(ar.src);
      if (static_cast<int>(rows.size()) != want_rows)
        throw ParseError(ParseError::BadMatrixShape, 1, 1,
                         "module " + ms.name + ", map " + arrow_name + ": expected " +
                             std::to_string(want_rows) + " rows");
      for (const auto& r : rows)
        if (static_cast<int>(r.size()) != want_cols)
          throw ParseError(ParseError::BadMatrixShape, 1, 1,
                           "module " + ms.name + ", map " + arrow_name +
                               ": expected " + std::to_string(want_cols) +
                               " columns");
    }
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  const Field& f = doc.field;
  if (f.is_rational())
    out << "field Q\n";
  else
    out << "field F " << f.characteristic() << "\n";
  out << "quiver\n";
  for (int v = 0; v < doc.quiver.n_vertices(); ++v)
    out << "  vertex " << doc.quiver.vertex_name(v) << "\n";
  for (int a = 0; a < doc.quiver.n_arrows(); ++a) {
    const Arrow& ar = doc.quiver.arrow(a);
    out << "  arrow " << ar.name << " " << doc.quiver.vertex_name(ar.src) << " "
        << doc.quiver.vertex_name(ar.tgt) << "\n";
  }
  if (!doc.relations.empty()) {
    out << "relations\n";
    for (const auto& rel : doc.relations) {
      out << "  ";
      for (size_t t = 0; t < rel.size(); ++t) {
        if (t > 0) out << " + ";
        out << f.str(rel[t].coeff) << "*";
        for (size_t i = 0; i < rel[t].path.arrows.size(); ++i) {
          if (i > 0) out << ".";
          out << doc.quiver.arrow(rel[t].path.arrows[i]).name;
        }
      }
      out << "\n";
    }
  }
  for (const auto& ms : doc.modules) {
    out << "module " << ms.name << "\n  dim";
    for (int v = 0; v < doc.quiver.n_vertices(); ++v) {
      auto it = ms.dims.find(doc.quiver.vertex_name(v));
      int d = it == ms.dims.end() ? 0 : it->second;
      out << " " << doc.quiver.vertex_name(v) << "=" << d;
    }
    out << "\n";
    for (const auto& [arrow_name, rows] : ms.maps) {
      out << "  map " << arrow_name << " [";
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out << ",";
        out << "[";
        for (size_t j = 0; j < rows[i].size(); ++j) {
          if (j > 0) out << ",";
          out << f.str(rows[i][j]);
        }
        out << "]";
      }
      out << "]\n";
    }
  }
  return out.str();
}

AlgebraPtr document_algebra(const Document& doc, int max_length) {
  return build_algebra(doc.quiver, doc.relations, doc.field, max_length);
}

Rep document_module(const Document& doc, const AlgebraPtr& a,
                    const std::string& name) {
  const ModuleSpec* spec = nullptr;
  for (const auto& ms : doc.modules)
    if (ms.name == name) spec = &ms;
  if (!spec) throw std::invalid_argument("no module block named " + name);
  const Quiver& q = a->quiver();
  std::vector<int> dim(q.n_vertices(), 0);
  for (const auto& [vn, d] : spec->dims) dim[q.vertex_id(vn)] = d;
  std::vector<Mat> act;
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    Mat m(a->field(), dim[arrow.tgt], dim[arrow.src]);
    auto it = spec->maps.find(arrow.name);
    if (it != spec->maps.end()) {
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = it->second[i][j];
    }
    act.push_back(std::move(m));
  }
  return make_rep(a, std::move(dim), std::move(act));
}

std::string emit_report(const Json& report) { return report.dump(2) + "\n"; }

Json ext_value_json(const ExtValue& v) {
  if (v.is_finite()) return Json(v.value);
  return Json(v.str());
}

}  // namespace qhom
