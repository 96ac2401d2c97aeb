/*
 * Copyright 2026 The tcea Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tcea/tree/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "tcea/error.hpp"

namespace tcea::tree {

namespace {

std::string format_constant(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

std::size_t format_node(const std::vector<Node>& nodes, std::size_t i, std::string& out) {
  const Node& node = nodes[i];
  switch (node.kind) {
    case Node::Kind::Terminal: out += name(node.channel); return i + 1;
    case Node::Kind::Constant: out += format_constant(node.value); return i + 1;
    case Node::Kind::Unary: {
      out += '(';
      out += name(node.unary_op);
      out += ' ';
      const std::size_t end = format_node(nodes, i + 1, out);
      out += ')';
      return end;
    }
    case Node::Kind::Binary: {
      out += '(';
      out += name(node.binary_op);
      out += ' ';
      std::size_t next = format_node(nodes, i + 1, out);
      out += ' ';
      next = format_node(nodes, next, out);
      out += ')';
      return next;
    }
  }
  return i + 1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ActivationTree run() {
    parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return ActivationTree(std::move(nodes_));
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("formula: " + what + " at offset " + std::to_string(at), at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  void parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input", pos_);
    if (text_[pos_] == ')') fail("unexpected ')'", pos_);
    if (text_[pos_] != '(') {
      parse_leaf();
      return;
    }
    ++pos_;
    skip_space();
    const std::size_t op_at = pos_;
    const std::string_view op = atom();
    if (op.empty()) fail("expected operator", op_at);
    int arity = 0;
    if (auto u = parse_unary(op)) {
      nodes_.push_back(Node::unary(*u));
      arity = 1;
    } else if (auto b = parse_binary(op)) {
      nodes_.push_back(Node::binary(*b));
      arity = 2;
    } else {
      fail("unknown operator '" + std::string(op) + "'", op_at);
    }
    for (int k = 0; k < arity; ++k) parse_expr();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') {
      fail("operator '" + std::string(op) + "' expects " + std::to_string(arity) + " argument(s)",
           pos_);
    }
    ++pos_;
  }

  void parse_leaf() {
    const std::size_t at = pos_;
    const std::string_view token = atom();
    if (auto ch = parse_channel(token)) {
      nodes_.push_back(Node::terminal(*ch));
      return;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      if (parse_unary(token) || parse_binary(token)) {
        fail("operator '" + std::string(token) + "' outside parentheses", at);
      }
      fail("unknown token '" + std::string(token) + "'", at);
    }
    if (!is_pool_constant(value)) fail("constant '" + std::string(token) + "' not in pool", at);
    nodes_.push_back(Node::constant(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

std::size_t infix_node(const std::vector<Node>& nodes, std::size_t i, std::string& out) {
  const Node& node = nodes[i];
  switch (node.kind) {
    case Node::Kind::Terminal: out += name(node.channel); return i + 1;
    case Node::Kind::Constant: out += format_constant(node.value); return i + 1;
    case Node::Kind::Unary: {
      std::string inner;
      const std::size_t end = infix_node(nodes, i + 1, inner);
      switch (node.unary_op) {
        case UnaryOp::Identity: out += inner; break;
        case UnaryOp::Negate: out += "-(" + inner + ")"; break;
        case UnaryOp::Abs: out += "|" + inner + "|"; break;
        case UnaryOp::Square: out += "(" + inner + ")^2"; break;
        case UnaryOp::Cube: out += "(" + inner + ")^3"; break;
        case UnaryOp::LogAbs: out += "log|" + inner + "|"; break;
        default: out += std::string(name(node.unary_op)) + "(" + inner + ")"; break;
      }
      return end;
    }
    case Node::Kind::Binary: {
      std::string left;
      std::string right;
      std::size_t next = infix_node(nodes, i + 1, left);
      next = infix_node(nodes, next, right);
      switch (node.binary_op) {
        case BinaryOp::Add: out += "(" + left + " + " + right + ")"; break;
        case BinaryOp::Sub: out += "(" + left + " - " + right + ")"; break;
        case BinaryOp::Mul: out += "(" + left + "*" + right + ")"; break;
        case BinaryOp::Div: out += "(" + left + "/" + right + ")"; break;
        case BinaryOp::Max: out += "max(" + left + ", " + right + ")"; break;
        case BinaryOp::Min: out += "min(" + left + ", " + right + ")"; break;
      }
      return next;
    }
  }
  return i + 1;
}

}  // namespace

std::string format(const ActivationTree& tree) {
  std::string out;
  format_node(tree.nodes(), 0, out);
  return out;
}

ActivationTree parse(std::string_view text) { return Parser(text).run(); }

std::string format_infix(const ActivationTree& tree) {
  std::string out;
  infix_node(tree.nodes(), 0, out);
  if (out.size() > 2 && out.front() == '(' && out.back() == ')') {
    // Drop the redundant outer parentheses of a top-level binary operator.
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      depth += out[i] == '(' ? 1 : (out[i] == ')' ? -1 : 0);
      if (depth == 0) {
        outer = false;
        break;
      }
    }
    if (outer) out = out.substr(1, out.size() - 2);
  }
  return out;
}

}  // namespace tcea::tree
