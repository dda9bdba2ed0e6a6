#ifndef FDKNOT_FDKNOT_HPP
#define FDKNOT_FDKNOT_HPP

#include "fdknot/bounds.hpp"
#include "fdknot/gauss_code.hpp"
#include "fdknot/gauss_diagram.hpp"
#include "fdknot/invariants.hpp"
#include "fdknot/laurent.hpp"
#include "fdknot/moves.hpp"
#include "fdknot/trace_json.hpp"

#endif
