#pragma once

namespace erastar {

// Entry point behind the `erastar` binary. Usage errors exit 2, runtime
// errors exit 1 with a message on stderr.
int cli_main(int argc, const char* const* argv);

}  // namespace erastar
