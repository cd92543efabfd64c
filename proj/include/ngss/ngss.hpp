#pragma once

#include "ngss/spectral_config.hpp"
#include "ngss/spec_json.hpp"
#include "ngss/bivariate_series.hpp"
#include "ngss/soliton_engine.hpp"
#include "ngss/asymptotics.hpp"
#include "ngss/verification.hpp"
#include "ngss/grid_io.hpp"
#include "ngss/presets.hpp"
