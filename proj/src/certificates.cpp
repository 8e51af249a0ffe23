namespace nilg2 {}
