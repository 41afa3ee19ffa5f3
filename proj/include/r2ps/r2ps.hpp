#pragma once

#include "errors.hpp"
#include "frame.hpp"
#include "event.hpp"
#include "enumerate.hpp"
#include "mass.hpp"
#include "fusion.hpp"
#include "properties.hpp"
#include "decision.hpp"
#include "io.hpp"
