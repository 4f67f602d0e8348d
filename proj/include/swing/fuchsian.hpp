#pragma once

#include "swing/fuchsian/exponential.hpp"
#include "swing/fuchsian/frobenius.hpp"
#include "swing/fuchsian/kimura.hpp"
#include "swing/fuchsian/lame.hpp"
#include "swing/fuchsian/ode.hpp"
#include "swing/fuchsian/rational_function.hpp"
