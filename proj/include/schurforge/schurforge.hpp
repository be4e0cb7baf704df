#pragma once

#include "schurforge/errors.hpp"
#include "schurforge/field.hpp"
#include "schurforge/irred.hpp"
#include "schurforge/mpoly.hpp"
#include "schurforge/mpoly_io.hpp"
#include "schurforge/parallel.hpp"
#include "schurforge/report.hpp"
#include "schurforge/schur.hpp"
#include "schurforge/structure.hpp"
#include "schurforge/upoly.hpp"
#include "schurforge/version.hpp"
