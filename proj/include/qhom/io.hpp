#ifndef QHOM_IO_HPP
#define QHOM_IO_HPP

#include <json.hpp>

#include "qhom/rep.hpp"
#include "qhom/resolution.hpp"

namespace qhom {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  enum Kind {
    Syntax,
    UnknownArrow,
    UnknownVertex,
    NonComposablePath,
    BadMatrixShape,
    DuplicateName,
    FieldMismatch,
    BadFieldDecl
  };
  ParseError(Kind k, int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        kind(k),
        line(line),
        col(col) {}
  Kind kind;
  int line;
  int col;
};

// A module block: per-vertex dimensions and arrow matrices (row-major,
// shape dim[tgt] x dim[src]).  Missing matrices default to zero.
struct ModuleSpec {
  std::string name;
  std::map<std::string, int> dims;                       // by vertex name
  std::map<std::string, std::vector<std::vector<Scalar>>> maps;  // by arrow name
};

struct Document {
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<ModuleSpec> modules;
};

// Line-oriented text format:
//   field F <p> | field Q
//   quiver
//     vertex <id>
//     arrow <name> <src> <tgt>
//   relations
//     <coeff>*<arrow>.<arrow>... [+|- <term>]...
//   module <name>
//     dim <vertex>=<d> ...
//     map <arrow> [[a,b],[c,d]]
// '#' starts a comment.  Blocks end at the next keyword or end of input.
Document parse_document(const std::string& text);

std::string serialize_document(const Document& doc);

// Builds the algebra from the parsed quiver and relations.
AlgebraPtr document_algebra(const Document& doc, int max_length = 32);

// Instantiates a named module block over the document's algebra.
Rep document_module(const Document& doc, const AlgebraPtr& a,
                    const std::string& name);

// Canonical serialization: fixed key order (as inserted), two-space indent,
// newline-terminated.  Identical reports produce byte-identical text.
std::string emit_report(const Json& report);

Json ext_value_json(const ExtValue& v);

}  // namespace qhom

#endif
