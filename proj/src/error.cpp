// error.cpp

#include "indpath/error.hpp"

namespace indpath {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Loop: return "loop";
    case Errc::TwoCycle: return "two-cycle";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::SizeMismatch: return "size-mismatch";
    case Errc::Unsupported: return "unsupported";
    case Errc::InvalidSpec: return "invalid-spec";
    case Errc::UnknownCase: return "unknown-case";
    case Errc::InvalidStart: return "invalid-start";
    case Errc::ShapeMismatch: return "shape-mismatch";
    case Errc::IoError: return "io-error";
    case Errc::ResourceLimit: return "resource-limit";
    case Errc::ParseError: return "parse-error";
  }
  return "error";
}

bool is_validation_error(Errc c) {
  return c != Errc::Unsupported && c != Errc::ResourceLimit;
}

}  // namespace indpath
