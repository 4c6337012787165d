#include "moebius/errors.hpp"

namespace moebius {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::structural: return "structural";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::resource: return "resource";
    case ErrorKind::verification: return "verification";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return 2;
    case ErrorKind::structural: return 3;
    case ErrorKind::precondition: return 4;
    case ErrorKind::resource: return 5;
    case ErrorKind::verification: return 6;
    case ErrorKind::consistency: return 7;
    case ErrorKind::io: return 8;
  }
  return 1;
}

}  // namespace moebius
