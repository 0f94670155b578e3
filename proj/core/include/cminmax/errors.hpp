#pragma once

#include <stdexcept>
#include <string>

namespace cminmax {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class EmptyCloudError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  using Error::Error;
};

class NotConvexVertexError : public Error {
public:
  using Error::Error;
};

class NoCornersError : public Error {
public:
  using Error::Error;
};

class BudgetExceededError : public Error {
public:
  using Error::Error;
};

}  // namespace cminmax
