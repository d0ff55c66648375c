#pragma once

namespace gqfi::cli {

/// Entry point shared by the gqfi binary and the in-process CLI tests.
/// Exit codes: 0 ok, 2 config, 3 data/sampling, 4 I/O, 5 validation failure.
int run(int argc, const char* const* argv);

}  // namespace gqfi::cli
