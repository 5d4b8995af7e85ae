#pragma once

#include "tutte3/activities.hpp"
#include "tutte3/bijection.hpp"
#include "tutte3/checks.hpp"
#include "tutte3/compatible.hpp"
#include "tutte3/document.hpp"
#include "tutte3/error.hpp"
#include "tutte3/graphic.hpp"
#include "tutte3/matroid.hpp"
#include "tutte3/perspective.hpp"
#include "tutte3/polynomial.hpp"
#include "tutte3/setcore.hpp"
#include "tutte3/tutte.hpp"
