#pragma once

#define HONEYSIM_VERSION "0.1.0"

namespace honeysim {
inline const char* version() { return HONEYSIM_VERSION; }
}
