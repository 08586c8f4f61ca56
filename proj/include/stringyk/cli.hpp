#pragma once

namespace stringyk {
int run_cli(int argc, char** argv);
}
