#pragma once

// Umbrella header: Pythagorean fuzzy conflict analysis.

#include "pfca/alliance.hpp"
#include "pfca/error.hpp"
#include "pfca/format.hpp"
#include "pfca/group.hpp"
#include "pfca/info_system.hpp"
#include "pfca/io.hpp"
#include "pfca/loss.hpp"
#include "pfca/pfn.hpp"
#include "pfca/render.hpp"
#include "pfca/risk.hpp"
