#pragma once

#include "vtube/alexander.hpp"
#include "vtube/arcs.hpp"
#include "vtube/bracket.hpp"
#include "vtube/canonical.hpp"
#include "vtube/catalog.hpp"
#include "vtube/containment.hpp"
#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"
#include "vtube/invariants.hpp"
#include "vtube/laurent.hpp"
#include "vtube/moves.hpp"
#include "vtube/quandle.hpp"
#include "vtube/report.hpp"
#include "vtube/search.hpp"
#include "vtube/spin.hpp"
#include "vtube/tube.hpp"
#include "vtube/vertical_double.hpp"
#include "vtube/wirtinger.hpp"
