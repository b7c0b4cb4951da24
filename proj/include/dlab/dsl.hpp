#pragma once

// Line-oriented text formats for shapes (.fincat) and diagrams (.diag).
//
// .fincat
//   category <name>
//   object <id>
//   morphism <id>: <src> -> <dst>
//   identity <obj> = <mor>
//   compose <g> . <f> = <h>
//   builtin <name>            (alone, instead of the table)
//
// .diag
//   shape <expr>              (names joined by " x ", each optionally ^op)
//   base finset | base mat <p>
//   set <obj> = {a,b,...}     map <mor> = a->x, b->y
//   dim <obj> = n             mat <mor> = [[...],...] (mod p)
//
// '#' starts a comment. Identity morphisms are omitted from diagrams.

#include <functional>
#include <stdexcept>
#include <string>

#include "dlab/diagram.hpp"

namespace dlab {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// Looks a shape name up; nullptr if unknown.
using ShapeResolver = std::function<CatPtr(const std::string&)>;

/// Built-ins, then <name>.fincat in $DERIVATOR_LAB_SHAPEDIR.
CatPtr resolve_shape(const std::string& name);
/// "J x K^op x ..." with each factor resolved by `r`. A single factor is
/// returned as is (not wrapped in a product).
CatPtr resolve_shape_expr(const std::string& expr, const ShapeResolver& r = resolve_shape);

CatPtr parse_category(const std::string& text, const ShapeResolver& r = resolve_shape);
/// Emits `builtin <name>` when the category is a built-in shape under its own
/// name, and the full table otherwise.
std::string serialize(const FinCategory& c);

struct DiagHeader {
  std::string shape_expr;
  CatPtr shape;
  std::string base;  // "finset" or "mat"
  Scalar p = 0;
};

DiagHeader read_diag_header(const std::string& text, const ShapeResolver& r = resolve_shape);
Diagram<FinSetBase> parse_diagram(const std::string& text, const FinSetBase& b,
                                  const ShapeResolver& r = resolve_shape);
Diagram<MatBase> parse_diagram(const std::string& text, const MatBase& b, const ShapeResolver& r = resolve_shape);

/// The shape header uses the shape's name, which must resolve back to it.
std::string serialize(const FinSetBase& b, const Diagram<FinSetBase>& x);
std::string serialize(const MatBase& b, const Diagram<MatBase>& x);

/// "o->k, ...; m->n, ..." from J to K. The morphism part may be omitted when
/// the object assignment determines the functor.
Functor parse_functor(const std::string& spec, const CatPtr& j, const CatPtr& k);

std::string read_file(const std::string& path);

}  // namespace dlab
