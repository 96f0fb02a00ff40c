#pragma once

#include "waveprop/apertures.hpp"
#include "waveprop/config.hpp"
#include "waveprop/dispersion.hpp"
#include "waveprop/errors.hpp"
#include "waveprop/evolution.hpp"
#include "waveprop/field_io.hpp"
#include "waveprop/lattice.hpp"
#include "waveprop/matching.hpp"
#include "waveprop/patterns.hpp"
#include "waveprop/propagation.hpp"
