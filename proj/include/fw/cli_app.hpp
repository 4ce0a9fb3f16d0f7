#pragma once

namespace fw::cli {

// Exit codes: 0 ok, 2 bad configuration, 3 numeric failure, 4 function
// singular on E, 5 z0 on E.
int run(int argc, const char* const* argv);

}  // namespace fw::cli
