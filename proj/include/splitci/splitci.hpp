#pragma once

#include "splitci/certifier.hpp"
#include "splitci/error.hpp"
#include "splitci/groebner.hpp"
#include "splitci/hatbuilder.hpp"
#include "splitci/linalg.hpp"
#include "splitci/normalizer.hpp"
#include "splitci/parser.hpp"
#include "splitci/polyring.hpp"
#include "splitci/regseq.hpp"
#include "splitci/scalar.hpp"
