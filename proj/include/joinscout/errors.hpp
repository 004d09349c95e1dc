#pragma once

#include <stdexcept>
#include <string>

namespace joinscout {

/// Base for every error raised by the library. The CLI maps any `Error` to
/// the data-error exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JOINSCOUT_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

JOINSCOUT_DEFINE_ERROR(ManifestParseError);
JOINSCOUT_DEFINE_ERROR(MissingFileError);
JOINSCOUT_DEFINE_ERROR(SchemaMismatchError);
JOINSCOUT_DEFINE_ERROR(DanglingForeignKeyError);
JOINSCOUT_DEFINE_ERROR(ConfigError);
JOINSCOUT_DEFINE_ERROR(ProviderError);
JOINSCOUT_DEFINE_ERROR(EmptyColumnError);
JOINSCOUT_DEFINE_ERROR(UnknownTableError);
JOINSCOUT_DEFINE_ERROR(ValueTooShortError);
JOINSCOUT_DEFINE_ERROR(SingleTokenError);
JOINSCOUT_DEFINE_ERROR(IoError);

#undef JOINSCOUT_DEFINE_ERROR

}  // namespace joinscout
