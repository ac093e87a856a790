int cmd_ma_verify_stub(){return 0;}
