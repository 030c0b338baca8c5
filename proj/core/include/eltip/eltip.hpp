#pragma once

#include "eltip/dynamics.hpp"
#include "eltip/errors.hpp"
#include "eltip/io.hpp"
#include "eltip/ising.hpp"
#include "eltip/landscape.hpp"
#include "eltip/spin_config.hpp"
#include "eltip/transform.hpp"
#include "eltip/version.hpp"
