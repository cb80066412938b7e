#pragma once

#include "padicpow/bigint.hpp"
#include "padicpow/error.hpp"
#include "padicpow/localfield.hpp"
#include "padicpow/powerclasses.hpp"
#include "padicpow/numberfield.hpp"
#include "padicpow/polyring.hpp"
#include "padicpow/roots.hpp"
#include "padicpow/decide.hpp"
#include "padicpow/constructions.hpp"
#include "padicpow/oracle.hpp"
#include "padicpow/parse.hpp"
#include "padicpow/report_json.hpp"
