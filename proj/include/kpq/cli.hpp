#pragma once

#include <iosfwd>

namespace kpq {

/// Entry point of the `kpq` command. Returns 0 on success, 1 when a
/// verification fails or a cap is exceeded, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kpq
