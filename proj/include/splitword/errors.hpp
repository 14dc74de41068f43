#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "splitword/graph.hpp"

namespace splitword {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised by split recognition; carries an induced 2K2, C4 or C5.
class NotSplit : public Error {
 public:
  NotSplit(std::string obstruction, Embedding embedding)
      : Error("graph is not split: induced " + obstruction),
        obstruction_(std::move(obstruction)),
        embedding_(std::move(embedding)) {}
  const std::string& obstruction() const { return obstruction_; }
  const Embedding& embedding() const { return embedding_; }

 private:
  std::string obstruction_;
  Embedding embedding_;
};

// Raised when a split graph has no transitive orientation; carries an
// induced B1, B2 or B3.
class NotComparability : public Error {
 public:
  NotComparability(std::string member, Embedding embedding)
      : Error("split graph is not a comparability graph: induced " + member),
        member_(std::move(member)),
        embedding_(std::move(embedding)) {}
  const std::string& member() const { return member_; }
  const Embedding& embedding() const { return embedding_; }

 private:
  std::string member_;
  Embedding embedding_;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class NotLabellable : public Error {
 public:
  NotLabellable(int vertex, std::vector<int> labels);
  int vertex() const { return vertex_; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  int vertex_;
  std::vector<int> labels_;
};

class PropertiesViolated : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public Error {
 public:
  using Error::Error;
};

class MissingVertex : public Error {
 public:
  explicit MissingVertex(std::vector<int> missing);
  const std::vector<int>& missing() const { return missing_; }

 private:
  std::vector<int> missing_;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace splitword
