#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ocelkit {

/// Base class for all ocelkit failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// The log handed to a writer cannot be serialized at all
/// (e.g. attribute names colliding with reserved column names).
class InvalidLogError : public Error {
 public:
  using Error::Error;
};

class UnknownEventError : public Error {
 public:
  explicit UnknownEventError(const std::string& id)
      : Error("unknown event id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class UnknownObjectError : public Error {
 public:
  explicit UnknownObjectError(const std::string& id)
      : Error("unknown object id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

/// The file is not an SQLite database.
class NotADatabaseError : public IoError {
 public:
  using IoError::IoError;
};

/// One of the six fixed tables is absent from a relational log.
class MissingTableError : public Error {
 public:
  using Error::Error;
};

class XmlSyntaxError : public Error {
 public:
  XmlSyntaxError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

class JsonSyntaxError : public Error {
 public:
  using Error::Error;
};

/// Structurally well-formed input that does not match the exchange-format
/// grammar. `path` locates the offending node (element path or JSON pointer).
class SchemaViolationError : public Error {
 public:
  SchemaViolationError(const std::string& what, std::string path)
      : Error(what + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A value literal that cannot be parsed under its declared kind.
class ValueParseError : public Error {
 public:
  ValueParseError(const std::string& what, std::string path)
      : Error(what + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace ocelkit
