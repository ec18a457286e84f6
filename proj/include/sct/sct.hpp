#pragma once

#include "sct/complex.hpp"
#include "sct/decision.hpp"
#include "sct/gallery.hpp"
#include "sct/io.hpp"
#include "sct/pair.hpp"
#include "sct/subdivision.hpp"
